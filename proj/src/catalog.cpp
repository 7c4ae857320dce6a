#include "trisurf/catalog.hpp"

namespace trisurf {

Catalog::Catalog(int p, int jobs) : p_(p), jobs_(jobs) {
  if (p == 2 || !is_prime(p)) throw Error("the prime must be odd");
}

GroupPtr Catalog::group(const Family& family) {
  std::lock_guard lock(mu_);
  auto tag = family.tag();
  auto it = groups_.find(tag);
  if (it != groups_.end()) return it->second;
  auto g = build_group(family);
  groups_.emplace(tag, g);
  return g;
}

const std::vector<Automorphism>& Catalog::automorphisms(const FiniteGroup& g) {
  std::lock_guard lock(mu_);
  auto tag = g.family().tag();
  auto it = auts_.find(tag);
  if (it == auts_.end()) it = auts_.emplace(tag, automorphism_group(g)).first;
  return it->second;
}

const std::vector<GeneratingTriple>& Catalog::triples(const FiniteGroup& g, const TriangleSignature& sig) {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(g.family().tag(), sig);
  auto it = triples_.find(key);
  if (it == triples_.end()) it = triples_.emplace(key, enumerate_triples(g, sig, jobs_)).first;
  return it->second;
}

std::vector<Family> Catalog::base_families() const {
  return {Family::catalog(FamilyKind::DpxZp, p_), Family::catalog(FamilyKind::Z2pxZp, p_),
          Family::catalog(FamilyKind::Zp2SemiZ2, p_), Family::catalog(FamilyKind::Z2p2, p_),
          Family::dihedral(p_ * p_)};
}

std::vector<Family> Catalog::overgroups(int order) const {
  const int q = p_ * p_;
  std::vector<Family> out;
  if (order == 4 * q) {
    out.push_back(Family::catalog(FamilyKind::DpxDp, p_));
    out.push_back(Family::catalog(FamilyKind::DpxZ2p, p_));
    out.push_back(Family::direct(Family::catalog(FamilyKind::Z2p2, p_), Family::cyclic(2)));
  } else if (order == 6 * q) {
    out.push_back(Family::catalog(FamilyKind::Zp2SemiD3, p_));
  } else if (order == 8 * q) {
    out.push_back(Family::catalog(FamilyKind::Dp2SemiZ2, p_));
    out.push_back(Family::catalog(FamilyKind::Zp2SemiD4, p_));
  }
  return out;
}

}  // namespace trisurf

#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "trisurf/group.hpp"
#include "trisurf/ske.hpp"

namespace trisurf {

/// Memoized groups, automorphism groups and triple enumerations for one prime.
/// Returned references stay valid for the lifetime of the catalog.
class Catalog {
 public:
  explicit Catalog(int p, int jobs = 0);

  int prime() const { return p_; }
  int jobs() const { return jobs_; }

  GroupPtr group(const Family& family);
  GroupPtr group(FamilyKind kind) { return group(Family::catalog(kind, p_)); }

  /// Aut of a group built by this catalog.
  const std::vector<Automorphism>& automorphisms(const FiniteGroup& g);

  /// enumerate_triples(g, sig), cached.
  const std::vector<GeneratingTriple>& triples(const FiniteGroup& g, const TriangleSignature& sig);

  /// The five groups of order 2p² in classification order: 𝔻ₚ×ℤₚ first, so
  /// surfaces shared with ℤ₂ₚ×ℤₚ are listed under it, and 𝔻ₚ² last.
  std::vector<Family> base_families() const;

  /// Catalog groups of order `order` that can host an extended action.
  std::vector<Family> overgroups(int order) const;

 private:
  int p_;
  int jobs_;
  std::recursive_mutex mu_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::vector<Automorphism>> auts_;
  std::map<std::pair<std::string, TriangleSignature>, std::vector<GeneratingTriple>> triples_;
};

}  // namespace trisurf

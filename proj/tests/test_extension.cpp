#include <fmt/format.h>

#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "trisurf/census.hpp"
#include "trisurf/extension.hpp"

using namespace trisurf;

namespace {

// Partition of params under i ~ j  <=>  i + ij + j ≡ 0 (mod modulus), plus i ~ i.
std::set<std::set<int>> congruence_partition(const std::vector<int>& params, int modulus) {
  std::set<std::set<int>> out;
  for (int i : params) {
    std::set<int> cls{i};
    for (int j : params)
      if ((i + i * j + j) % modulus == 0) cls.insert(j);
    out.insert(cls);
  }
  return out;
}

std::set<std::set<int>> surface_partition(Catalog& cat, FamilyKind kind, ActionCase tc) {
  auto g = cat.group(kind);
  const auto& auts = cat.automorphisms(*g);
  std::map<GeneratingTriple, int> param_of;
  auto params = case_params(tc, cat.prime());
  for (int prm : params) param_of[aut_canonical(auts, explicit_triple(tc, *g, prm))] = prm;
  auto sig = explicit_triple(tc, *g, params.front()).sig;
  std::set<std::set<int>> out;
  for (const auto& orbit : surface_classes(cat, *g, sig)) {
    std::set<int> cls;
    for (const auto& m : orbit.members) cls.insert(param_of.at(m.rep));
    out.insert(cls);
  }
  return out;
}

}  // namespace

TEST_CASE("twist of the explicit triple") {
  for (int p : {3, 5, 7}) {
    auto g = build_group(FamilyKind::DpxZp, p);
    for (int j = 0; j <= p - 2; ++j) {
      auto t = explicit_triple(ActionCase::DihedralEqual, *g, j);
      auto s = twist_action(*g, t);
      CHECK(s[0] == g->eval(fmt::format("c a^-1 b^{}", -1 - j)));
      CHECK(s[1] == g->eval(fmt::format("a b^{} c b b^{} a^-1", j, -j)));
      CHECK(s[2] == t[2]);
      CHECK(is_generating_triple(*g, s));
      // σ² is conjugation by g3.
      auto s2 = twist_action(*g, s);
      for (int i = 0; i < 3; ++i) CHECK(s2[i] == g->conj(t[2], t[i]));
    }
    auto tma2 = explicit_triple(ActionCase::DihedralMixed, *g, 0);
    if (p > 3) CHECK_THROWS_AS(twist_action(*g, tma2), Error);
  }
}

TEST_CASE("twist merges Aut-classes by i + ij + j ≡ 0") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    Catalog cat(p);
    CHECK(surface_partition(cat, FamilyKind::DpxZp, ActionCase::DihedralEqual) ==
          congruence_partition(case_params(ActionCase::DihedralEqual, p), p));
    CHECK(surface_partition(cat, FamilyKind::Z2p2, ActionCase::CyclicEqual) ==
          congruence_partition(case_params(ActionCase::CyclicEqual, p), p * p));
  }
}

TEST_CASE("surface classes agree with the brute-force twist") {
  Catalog cat(5);
  for (auto kind : {FamilyKind::DpxZp, FamilyKind::Z2p2}) {
    auto g = cat.group(kind);
    for (const auto& sig : admissible_triangular_signatures(*g)) {
      auto d = display_order(sig);
      if (!d.is_aab()) continue;
      const auto& ts = cat.triples(*g, d);
      for (const auto& orbit : surface_classes(cat, *g, d)) {
        REQUIRE(!orbit.members.empty());
        CHECK(orbit.members.size() <= 2);
        auto a = orbit.members.front().rep.elems;
        auto twisted = twist_action(*g, orbit.members.front().rep).elems;
        if (orbit.members.size() == 2) {
          auto b = orbit.members.back().rep.elems;
          CHECK_FALSE(oracle::equivalent(*g, a, b));
          CHECK(oracle::equivalent(*g, twisted, b));
        } else {
          CHECK(oracle::equivalent(*g, twisted, a));
        }
      }
      (void)ts;
    }
  }
}

TEST_CASE("inclusion rows") {
  for (int p : {3, 5, 7}) {
    auto n = InclusionRow::normal_aab(2 * p, p);
    CHECK(n.source == TriangleSignature{{2 * p, 2 * p, p}});
    CHECK(n.target == TriangleSignature{{2, 2 * p, 2 * p}});
    CHECK(n.index == 2);
    CHECK(n.normal);
    CHECK(n.index_consistent());
    auto nn = InclusionRow::nonnormal_2n2n(p);
    CHECK(nn.source == TriangleSignature{{2, p, 2 * p}});
    CHECK(nn.target == TriangleSignature{{2, 3, 2 * p}});
    CHECK(nn.index == 3);
    CHECK_FALSE(nn.normal);
    CHECK(nn.index_consistent() == (p > 3));  // (2,3,6) has zero area
    auto rows = rows_from(TriangleSignature{{2 * p, 2 * p, p}});
    CHECK(std::any_of(rows.begin(), rows.end(), [&](const InclusionRow& r) { return r.target == n.target && r.words == n.words; }));
  }
  InclusionRow bad = InclusionRow::normal_aab(10, 5);
  bad.index = 3;
  CHECK_FALSE(bad.index_consistent());
}

TEST_CASE("rotation") {
  auto g = build_group(FamilyKind::DpxZp, 5);
  auto t = explicit_triple(ActionCase::DihedralEqual, *g, 1);
  auto r = rotate(t, 1);
  CHECK(r.elems == std::array<Elem, 3>{t[1], t[2], t[0]});
  CHECK(r.sig == TriangleSignature{{10, 5, 10}});
  CHECK(rotate(t, 3) == t);
  CHECK(is_generating_triple(*g, r));
}

TEST_CASE("restriction along a row produces a generating triple of the source signature") {
  Catalog cat(5);
  auto over = cat.group(FamilyKind::DpxZ2p);
  auto row = InclusionRow::normal_aab(10, 5);
  const auto& ts = cat.triples(*over, row.target);
  REQUIRE(!ts.empty());
  for (const auto& t : ts) {
    auto r = row.restrict(*over, t);
    CHECK(over->mul(over->mul(r[0], r[1]), r[2]) == 0);
    for (int i = 0; i < 3; ++i) CHECK(over->element_order(r[i]) == row.source[i]);
    CHECK(oracle::closure(*over, {r[0], r[1]}).size() == 50);
  }
}

TEST_CASE("extend_action examples") {
  const int p = 5;
  Catalog cat(p);
  auto g = cat.group(FamilyKind::DpxZp);
  auto row = InclusionRow::normal_aab(2 * p, p);
  auto dxd = cat.group(FamilyKind::DpxDp);
  auto dxz = cat.group(FamilyKind::DpxZ2p);
  auto j0 = explicit_triple(ActionCase::DihedralEqual, *g, 0);
  auto x = explicit_triple(ActionCase::DihedralEqual, *g, p - 2);
  auto j1 = explicit_triple(ActionCase::DihedralEqual, *g, 1);

  auto e = extend_action(cat, *g, j0, row, *dxd);
  REQUIRE(e.has_value());
  CHECK(is_generating_triple(*dxd, *e));
  CHECK(e->sig == row.target);
  CHECK_FALSE(extend_action(cat, *g, j0, row, *dxz).has_value());
  CHECK(extend_action(cat, *g, x, row, *dxz).has_value());
  for (const auto& f : cat.overgroups(4 * p * p))
    CHECK_FALSE(extend_action(cat, *g, j1, row, *cat.group(f)).has_value());

  auto tma2 = explicit_triple(ActionCase::DihedralMixed, *g, 0);
  auto d3 = cat.group(FamilyKind::Zp2SemiD3);
  auto e2 = extend_action(cat, *g, tma2, InclusionRow::nonnormal_2n2n(p), *d3);
  REQUIRE(e2.has_value());
  CHECK(e2->sig == TriangleSignature{{2, 3, 2 * p}});
}

TEST_CASE("full_action chains") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    Catalog cat(p);
    auto d = cat.group(FamilyKind::DpxZp);
    auto z = cat.group(FamilyKind::Z2p2);
    auto zz = cat.group(FamilyKind::Z2pxZp);

    auto f0 = full_action(cat, d, explicit_triple(ActionCase::DihedralEqual, *d, 0));
    CHECK(f0.group->family().kind == FamilyKind::Dp2SemiZ2);
    CHECK(f0.chain.size() == 2);
    CHECK(is_generating_triple(*f0.group, f0.triple));

    auto fx = full_action(cat, d, explicit_triple(ActionCase::DihedralEqual, *d, p - 2));
    CHECK(fx.group->family().kind == FamilyKind::DpxZ2p);
    auto fz = full_action(cat, zz, explicit_triple(ActionCase::AbelianPair, *zz, 0));
    CHECK(fz.group->family().kind == FamilyKind::DpxZ2p);
    CHECK(dedupe_key(cat, fx, (p - 1) * (p - 1)) == dedupe_key(cat, fz, (p - 1) * (p - 1)));

    auto fl = full_action(cat, z, explicit_triple(ActionCase::CyclicEqual, *z, p * p - 2));
    CHECK(fl.group->family().kind == FamilyKind::Zp2SemiD4);
    CHECK(fl.chain.size() == 2);
    CHECK(fl.group->order() == 8 * p * p);

    auto f1 = full_action(cat, z, explicit_triple(ActionCase::CyclicEqual, *z, 1));
    CHECK(f1.chain.empty());
    CHECK(f1.group == z);

    if (p > 3) {
      auto f2 = full_action(cat, d, explicit_triple(ActionCase::DihedralMixed, *d, 0));
      CHECK(f2.group->family().kind == FamilyKind::Zp2SemiD3);
      CHECK(f2.chain.size() == 1);
      CHECK_FALSE(f2.chain.front().row.normal);
    }
    CHECK(dedupe_key(cat, f0, (p - 1) * (p - 1)) != dedupe_key(cat, fx, (p - 1) * (p - 1)));
  }
}

TEST_CASE("normal-row extension agrees with the twist criteria") {
  for (int p : {3, 5, 7}) {
    Catalog cat(p);
    for (const auto& fam : cat.base_families()) {
      auto g = cat.group(fam);
      const auto& auts = cat.automorphisms(*g);
      for (const auto& sig : admissible_triangular_signatures(*g)) {
        auto d = display_order(sig);
        if (!d.is_aab()) continue;
        auto row = InclusionRow::normal_aab(d[0], d[2]);
        for (const auto& cls : aut_classes(*g, cat.triples(*g, d), auts)) {
          const auto& t = cls.rep;
          bool extends = false;
          for (const auto& f : cat.overgroups(2 * g->order()))
            extends = extends || extend_action(cat, *g, t, row, *cat.group(f)).has_value();
          bool brute = oracle::equivalent(*g, t.elems, twist_action(*g, t).elems);
          CAPTURE(fam.tag());
          CAPTURE(d.str());
          CHECK(twist_realized(*g, t, auts) == brute);
          CHECK(bcc_n8_check(*g, t, auts) == brute);
          CHECK(extends == brute);
        }
      }
    }
  }
}

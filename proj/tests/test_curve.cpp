#include "doctest.h"
#include "oracles.hpp"
#include "trisurf/census.hpp"
#include "trisurf/curve.hpp"
#include "trisurf/extension.hpp"

using namespace trisurf;

namespace {

// Genus of S/<h> by Riemann-Hurwitz, counting fixed points of every non-trivial power of h.
long long oracle_quotient_genus(const FiniteGroup& g, const GeneratingTriple& t, Elem h) {
  const int n = oracle::order_of(g, h);
  long long two_g_minus_2 = 0;  // 2g - 2 = |G| (1 - Σ 1/m_i)
  {
    long long num = 1, den = 1;
    for (int i = 0; i < 3; ++i) {
      num = num * t.sig[i] - den;
      den *= t.sig[i];
    }
    two_g_minus_2 = g.order() * num / den;
  }
  long long ram = 0;
  Elem x = h;
  for (int k = 1; k < n; ++k, x = g.mul(x, h))
    for (int i = 0; i < 3; ++i) ram += oracle::fixed_points(g, t[i], x);
  return ((two_g_minus_2 - ram) / n + 2) / 2;
}

}  // namespace

TEST_CASE("ngonal genus examples") {
  CHECK(ngonal_genus(5, {2, 2, 2, 2, 2}) == 6);
  CHECK(ngonal_genus(2, {1, 1}) == 0);
  CHECK(ngonal_genus(9, {1, 1, 7}) == 4);
  CHECK(ngonal_genus(2, std::vector<int>(6, 1)) == 2);
  CHECK_THROWS_WITH_AS(ngonal_genus(5, {1, 1}), doctest::Contains("exponent sum"), Error);
  CHECK_THROWS_WITH_AS(ngonal_genus(6, {2, 4}), doctest::Contains("gcd"), Error);
  CHECK_THROWS_AS(ngonal_genus(5, {5, 1, 4}), Error);
}

TEST_CASE("closed-form models") {
  CHECK(closed_form_model(ActionCase::AbelianPair, 5).render() == "y^5 = (x^10 - 1)");
  CHECK(closed_form_model(ActionCase::DihedralMixed, 5).render() == "y^5 = (x^5 - 1)^2");
  CHECK(closed_form_model(ActionCase::DihedralEqual, 5, 0).render() == "y^5 = (x^5 - 1)^2 * (x^5 + 1)^3");
  CHECK(closed_form_model(ActionCase::CyclicInvolution, 3).render() == "y^9 = (x^2 + 1)");
  CHECK(closed_form_model(ActionCase::CyclicInvolution, 3).infinity_exponent == 7);
  CHECK(closed_form_model(ActionCase::CyclicEqual, 5, 3).render() == "y^25 = x^2 * (x^2 - 1)^3");
  CHECK_THROWS_AS(closed_form_model(ActionCase::DihedralMixed, 3), Error);
  CHECK_THROWS_AS(closed_form_model(ActionCase::DihedralEqual, 5, 4), Error);
  CHECK(epsilon_j(5, 0) == 1);
  CHECK(epsilon_j(5, 3) == 2);
  for (int p : {3, 5, 7, 11})
    for (int j = 0; j <= p - 2; ++j) {
      int e = epsilon_j(p, j) * p - 2 * (j + 1);
      CHECK(e >= 1);
      CHECK(e < p);
    }
}

TEST_CASE("closed-form genera match Riemann-Hurwitz of the action") {
  for (int p : {3, 5, 7, 11}) {
    for (auto c : {ActionCase::AbelianPair, ActionCase::DihedralMixed, ActionCase::DihedralEqual, ActionCase::CyclicInvolution,
                   ActionCase::CyclicOrderP, ActionCase::CyclicMixed, ActionCase::CyclicEqual}) {
      if (c == ActionCase::DihedralMixed && p == 3) continue;
      CAPTURE(p);
      CAPTURE(to_string(c));
      long long rh = 0;
      {
        auto fam = c == ActionCase::AbelianPair   ? FamilyKind::Z2pxZp
                   : c <= ActionCase::DihedralEqual ? FamilyKind::DpxZp
                                            : FamilyKind::Z2p2;
        auto g = build_group(fam, p);
        rh = riemann_hurwitz_genus(g->order(), explicit_triple(c, *g, case_params(c, p).front()).sig);
      }
      CHECK(closed_form_genus(c, p) == rh);
      for (int prm : case_params(c, p)) {
        auto m = closed_form_model(c, p, model_param(c, p, prm));
        CHECK_FALSE(m.violation().has_value());
        CHECK(ngonal_genus(m) == rh);
      }
    }
  }
}

TEST_CASE("derived models") {
  auto g = build_group(FamilyKind::DpxZp, 5);
  auto t = explicit_triple(ActionCase::DihedralMixed, *g, 0);
  auto m = derive_model(*g, t, g->eval("b"));
  CHECK(m.n == 5);
  CHECK(m.render() == "y^5 = (x^5 - 1)^2");
  CHECK(models_equivalent(m, closed_form_model(ActionCase::DihedralMixed, 5)));
  CHECK(ngonal_genus(m) == 6);

  auto z = build_group(FamilyKind::Z2pxZp, 5);
  auto t1 = explicit_triple(ActionCase::AbelianPair, *z, 0);
  CHECK(quotient_genus(*z, t1, z->eval("b")) == 2);
  CHECK_THROWS_WITH_AS(derive_model(*z, t1, z->eval("b")), doctest::Contains("not 5-gonal"), Error);
  auto m1 = derive_model(*z, t1, z->eval("a"));
  CHECK(models_equivalent(m1, closed_form_model(ActionCase::AbelianPair, 5)));

  auto c = build_group(FamilyKind::Z2p2, 3);
  auto m4 = derive_model(*c, explicit_triple(ActionCase::CyclicEqual, *c, 4), c->eval("a"));
  CHECK(m4.n == 9);
  CHECK(m4.branch_exponents().size() == 4);
  CHECK(models_equivalent(m4, closed_form_model(ActionCase::CyclicEqual, 3, 4)));
}

TEST_CASE("quotient genus agrees with brute-force Riemann-Hurwitz") {
  for (int p : {3, 5}) {
    for (auto [kind, c] : std::vector<std::pair<FamilyKind, ActionCase>>{
             {FamilyKind::Z2pxZp, ActionCase::AbelianPair}, {FamilyKind::DpxZp, ActionCase::DihedralEqual},
             {FamilyKind::Z2p2, ActionCase::CyclicMixed}, {FamilyKind::Z2p2, ActionCase::CyclicEqual}}) {
      auto g = build_group(kind, p);
      auto t = explicit_triple(c, *g, case_params(c, p).back());
      for (Elem h = 1; h < g->order(); ++h) CHECK(quotient_genus(*g, t, h) == oracle_quotient_genus(*g, t, h));
    }
  }
}

TEST_CASE("model equivalence") {
  auto a = closed_form_model(ActionCase::DihedralEqual, 5, 0);
  auto b = closed_form_model(ActionCase::DihedralEqual, 5, 3);
  CHECK(models_equivalent(a, a));
  CHECK_FALSE(models_equivalent(a, b));
  CHECK_FALSE(models_equivalent(closed_form_model(ActionCase::AbelianPair, 5), closed_form_model(ActionCase::DihedralMixed, 5)));
  CyclicCoverModel u = closed_form_model(ActionCase::DihedralMixed, 5);
  for (auto& f : u.factors) f.exponent = f.exponent * 2 % 5;
  CHECK(models_equivalent(u, closed_form_model(ActionCase::DihedralMixed, 5)));
}

TEST_CASE("gonal subgroups and hyperellipticity") {
  for (int p : {3, 5, 7}) {
    auto z = build_group(FamilyKind::Z2p2, p);
    auto t41 = explicit_triple(ActionCase::CyclicInvolution, *z, 0);
    CHECK(is_hyperelliptic(*z, t41));
    auto g = build_group(FamilyKind::DpxZp, p);
    auto t3 = explicit_triple(ActionCase::DihedralEqual, *g, 1);
    CHECK_FALSE(is_hyperelliptic(*g, t3));
    CHECK(model_subgroup(*g, t3, p).has_value());
    auto sub = gonal_subgroups(*g, t3, p, true);
    REQUIRE(!sub.empty());
    CHECK(quotient_genus(*g, t3, sub.front()) == 0);
  }
}

TEST_CASE("the l = p^2 - 2 class of Z2p^2 on (2p^2,2p^2,p^2) is hyperelliptic") {
  for (int p : {3, 5}) {
    Catalog cat(p);
    auto z = cat.group(FamilyKind::Z2p2);
    auto full = full_action(cat, z, explicit_triple(ActionCase::CyclicEqual, *z, p * p - 2));
    const auto& f = *full.group;
    CHECK(is_hyperelliptic(f, full.triple));
    int hyperelliptic_involutions = 0;
    for (Elem h = 1; h < f.order(); ++h)
      if (oracle::order_of(f, h) == 2 && oracle_quotient_genus(f, full.triple, h) == 0) {
        ++hyperelliptic_involutions;
        // Central, with 2g + 2 fixed points.
        for (Elem x = 0; x < f.order(); ++x) CHECK(f.mul(x, h) == f.mul(h, x));
      }
    CHECK(hyperelliptic_involutions == 1);
  }
}

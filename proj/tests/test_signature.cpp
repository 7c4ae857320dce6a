#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "trisurf/signature.hpp"

using namespace trisurf;

TEST_CASE("Riemann-Hurwitz examples") {
  CHECK(riemann_hurwitz_genus(18, TriangleSignature{{6, 6, 3}}) == 4);
  CHECK(riemann_hurwitz_genus(50, TriangleSignature{{2, 5, 10}}) == 6);
  try {
    riemann_hurwitz_genus(18, TriangleSignature{{2, 3, 6}});
    FAIL("expected rejection");
  } catch (const BelowGenusBound& e) {
    CHECK(e.genus == 1);
  }
  CHECK_THROWS_AS(riemann_hurwitz_genus(18, TriangleSignature{{2, 4, 5}}), IncompatibleSignature);
  const int periods[] = {2, 2, 2, 2};
  CHECK(riemann_hurwitz_genus(2, 1, periods) == 3);
}

TEST_CASE("hyperbolic area and symbolic periods") {
  CHECK(hyperbolic_area(TriangleSignature{{2, 3, 7}}) == Rational(1, 42));
  CHECK_FALSE(TriangleSignature{{2, 3, 6}}.is_hyperbolic());
  CHECK(TriangleSignature{{10, 10, 5}}.symbolic(5) == "(2p,2p,p)");
  CHECK(TriangleSignature{{2, 4, 50}}.symbolic(5) == "(2,4,2p²)");
  CHECK(TriangleSignature{{3, 6, 6}}.normalized() == TriangleSignature{{3, 6, 6}});
}

namespace {

std::set<TriangleSignature> oracle_admissible(const FiniteGroup& g) {
  std::set<TriangleSignature> out;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      Elem z = oracle::inverse(g, g.mul(x, y));
      int a = oracle::order_of(g, x), b = oracle::order_of(g, y), c = oracle::order_of(g, z);
      if (a < 2 || b < 2 || c < 2) continue;
      TriangleSignature s = TriangleSignature{{a, b, c}}.normalized();
      Rational twice = Rational(g.order()) * hyperbolic_area(s) + 2;
      if (twice.denominator() != 1 || twice.numerator() % 2 || twice.numerator() / 2 < 2) continue;
      if (out.count(s)) continue;
      if (static_cast<int>(oracle::closure(g, {x, y}).size()) == g.order()) out.insert(s);
    }
  return out;
}

}  // namespace

TEST_CASE("admissible signatures agree with a brute-force scan") {
  for (int p : {3, 5}) {
    for (auto f : {Family::catalog(FamilyKind::Z2pxZp, p), Family::catalog(FamilyKind::DpxZp, p),
                   Family::catalog(FamilyKind::Zp2SemiZ2, p), Family::catalog(FamilyKind::Z2p2, p),
                   Family::dihedral(p * p)}) {
      auto g = build_group(f);
      CAPTURE(f.tag());
      auto got = admissible_triangular_signatures(*g);
      CHECK(std::set<TriangleSignature>(got.begin(), got.end()) == oracle_admissible(*g));
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("admissible signatures: known lists") {
  using S = std::vector<TriangleSignature>;
  CHECK(admissible_triangular_signatures(*build_group(FamilyKind::Z2pxZp, 5)) == S{{{5, 10, 10}}});
  CHECK(admissible_triangular_signatures(*build_group(FamilyKind::Zp2SemiZ2, 5)).empty());
  CHECK(admissible_triangular_signatures(*build_group(FamilyKind::Z2p2, 3)) ==
        S{{{2, 9, 18}}, {{3, 18, 18}}, {{6, 9, 18}}, {{9, 18, 18}}});
  for (int p : {3, 5, 7}) CHECK(admissible_triangular_signatures(*build_group(Family::dihedral(p * p))).empty());
  auto d3 = admissible_triangular_signatures(*build_group(FamilyKind::DpxZp, 3));
  CHECK(std::find(d3.begin(), d3.end(), TriangleSignature{{2, 3, 6}}) == d3.end());
  auto d5 = admissible_triangular_signatures(*build_group(FamilyKind::DpxZp, 5));
  CHECK(std::find(d5.begin(), d5.end(), TriangleSignature{{2, 5, 10}}) != d5.end());
}

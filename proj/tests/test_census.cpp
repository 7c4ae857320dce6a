#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "trisurf/census.hpp"

using namespace trisurf;

namespace {

const CensusReport& report(int p) {
  static std::map<int, CensusReport> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, classify(p)).first;
  return it->second;
}

int rows_for(const CensusReport& r, const std::string& group, TriangleSignature sig) {
  int n = 0;
  for (const auto& row : r.rows)
    if (row.group == group && row.signature == sig) n += row.count;
  return n;
}

}  // namespace

TEST_CASE("totals") {
  CHECK(report(3).total_surfaces == 8);
  CHECK(report(5).total_surfaces == 19);
  CHECK(report(7).total_surfaces == 33);
  CHECK(report(3).total_hypermaps == 11);
  CHECK(report(5).total_hypermaps == 30);
  CHECK(report(7).total_hypermaps == 56);
  for (int p : {3, 5, 7}) {
    const auto& r = report(p);
    CHECK(static_cast<int>(r.surfaces.size()) == r.total_surfaces);
    int rows = 0;
    for (const auto& row : r.rows) rows += row.count;
    CHECK(rows == r.total_surfaces);
    CHECK(hypermap_report(r).total == r.total_hypermaps);
  }
}

TEST_CASE("row counts per cell") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    const auto& r = report(p);
    const int q = p * p;
    CHECK(rows_for(r, "DpxZp", {{2, p, 2 * p}}) == (p > 3 ? 1 : 0));
    CHECK(rows_for(r, "DpxZp", {{2 * p, 2 * p, p}}) == (p + 1) / 2);
    CHECK(rows_for(r, "Z2pxZp", {{2 * p, 2 * p, p}}) == 0);
    CHECK(rows_for(r, "Z2p2", {{2, q, 2 * q}}) == 1);
    CHECK(rows_for(r, "Z2p2", {{2 * q, 2 * q, p}}) == (p - 1) / 2);
    CHECK(rows_for(r, "Z2p2", {{2 * p, q, 2 * q}}) == p - 1);
    CHECK(rows_for(r, "Z2p2", {{2 * q, 2 * q, q}}) == (q - 2 * p + 1) / 2);
    for (const auto& row : r.rows) {
      CHECK(row.genus == riemann_hurwitz_genus(2 * q, row.signature));
      CHECK(row.full_order % (2 * q) == 0);
    }
  }
  // (2,p,2p) is Euclidean at p = 3, so the row is absent.
  for (const auto& row : report(3).rows) CHECK(row.signature != TriangleSignature{{2, 3, 6}});
}

TEST_CASE("every surface model matches its closed form") {
  for (int p : {3, 5, 7})
    for (const auto& s : report(p).surfaces) {
      CAPTURE(s.id);
      CHECK(s.model.matches_closed_form);
      CHECK(s.genus == s.closed_form_genus);
      CHECK(ngonal_genus(s.model.derived) == s.genus);
    }
}

TEST_CASE("strong symmetric genus is the least triangular genus") {
  for (int p : {3, 5}) {
    const auto& r = report(p);
    for (auto kind : {FamilyKind::DpxZp, FamilyKind::Z2pxZp, FamilyKind::Z2p2}) {
      auto g = build_group(kind, p);
      long long best = -1;
      for (const auto& sig : admissible_triangular_signatures(*g)) {
        long long gg = riemann_hurwitz_genus(g->order(), sig);
        if (best < 0 || gg < best) best = gg;
      }
      CHECK(r.strong_symmetric_genus.at(g->family().name()) == best);
    }
  }
}

TEST_CASE("JSON round trip and byte stability") {
  const auto& r = report(5);
  auto text = render(r, Format::Json);
  CHECK(text == render(classify(5), Format::Json));
  CHECK(text == render(classify(5, {.jobs = 1}), Format::Json));
  auto back = census_from_json(text);
  CHECK(back == r);
  CHECK(render(back, Format::Json) == text);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK_FALSE(j.contains("generated_at"));
  CHECK(j.at("surfaces").size() == 19);

  auto stamped = r;
  stamped.generated_at = "2026-01-01T00:00:00Z";
  CHECK(census_from_json(render(stamped, Format::Json)) == stamped);
  CHECK_THROWS(census_from_json("{\"schema_version\": 99}"));
}

TEST_CASE("markdown rendering") {
  auto md = render(report(5), Format::Markdown);
  CHECK(md.find("| G | sig.G | #S | Aut(S) | sig.Aut(S) | genus |") != std::string::npos);
  CHECK(md.find("| 𝔻ₚ×ℤₚ | (2,p,2p) | 1 | ℤₚ²⋊𝔻₃ | (2,3,2p) | 6 |") != std::string::npos);
  CHECK(md.find("| ℤ₂ₚ² | (2p²,2p²,p²) | 1 | ℤ_{p²}⋊𝔻₄ | (2,4,2p²) | 24 |") != std::string::npos);
  CHECK(md.find("| ℤ₂ₚ² | (2p²,2p²,p²) | 7 | ℤ₂ₚ² |  | 24 |") != std::string::npos);
  auto hm = render(hypermap_census(3), Format::Markdown);
  CHECK(hm.find("Total: 11") != std::string::npos);
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("prime validation") {
  CHECK_THROWS_AS(classify(2), Error);
  CHECK_THROWS_AS(classify(9), Error);
  CHECK_THROWS_AS(classify(11), Error);
}

TEST_CASE("display conventions") {
  CHECK(display_order(TriangleSignature{{5, 10, 10}}) == TriangleSignature{{10, 10, 5}});
  CHECK(display_order(TriangleSignature{{10, 2, 5}}) == TriangleSignature{{2, 5, 10}});
  CHECK(table_display(TriangleSignature{{4, 2, 10}}, 5) == TriangleSignature{{2, 10, 4}});
  CHECK(table_display(TriangleSignature{{2, 10, 10}}, 5) == TriangleSignature{{10, 10, 2}});
  CHECK(action_case_for(Family::catalog(FamilyKind::Z2p2, 5), TriangleSignature{{50, 50, 25}}, 5) ==
        ActionCase::CyclicEqual);
  CHECK_FALSE(action_case_for(Family::catalog(FamilyKind::Zp2SemiZ2, 5), TriangleSignature{{10, 10, 5}}, 5));
  CHECK(model_param(ActionCase::CyclicMixed, 5, 3) == 1);
}

TEST_CASE("invariant suite") {
  for (int p : {3, 5, 7}) {
    CAPTURE(p);
    CHECK(invariant_violations(report(p)).empty());
  }
  auto broken = report(5);
  broken.rows.pop_back();
  broken.surfaces.front().model.matches_closed_form = false;
  auto v = invariant_violations(broken);
  REQUIRE(v.size() == 2);
  CHECK(v[0].starts_with("missing row Z2p2"));
  CHECK(v[1] == "surface 1: model differs from closed form");
}

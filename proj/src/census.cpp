#include "trisurf/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "json.hpp"

namespace trisurf {

namespace {

std::array<std::string, 3> labels(const FiniteGroup& g, const GeneratingTriple& t) {
  return {g.label(t[0]), g.label(t[1]), g.label(t[2])};
}

std::string pretty_family_name(const std::string& name, int p) {
  try {
    return parse_family(name, p).pretty();
  } catch (const Error&) {
    return name;
  }
}

std::string key_string(const DedupeKey& k, const FiniteGroup& full) {
  const auto& t = k.full_triple;
  return fmt::format("g={};|Aut|={};{};{};({},{},{})", k.genus, k.full_order, k.full_family, t.sig.str(),
                     full.label(t[0]), full.label(t[1]), full.label(t[2]));
}

}  // namespace

TriangleSignature display_order(const TriangleSignature& sig) {
  auto s = sig.normalized();
  if (s[1] == s[2] && s[0] != s[1]) return TriangleSignature{{s[1], s[2], s[0]}};
  return s;
}

TriangleSignature table_display(const TriangleSignature& sig, int p) {
  static const std::vector<std::string> preferred = {"(2,3,2p)", "(2,2p,4)", "(2p,2p,2)", "(2,4,2p²)"};
  auto s = sig.periods;
  std::sort(s.begin(), s.end());
  do {
    TriangleSignature cand{s};
    if (std::find(preferred.begin(), preferred.end(), cand.symbolic(p)) != preferred.end()) return cand;
  } while (std::next_permutation(s.begin(), s.end()));
  return sig;
}

std::optional<ActionCase> action_case_for(const Family& family, const TriangleSignature& d, int p) {
  const int q = p * p;
  auto is = [&](int a, int b, int c) { return d == TriangleSignature{{a, b, c}}; };
  switch (family.kind) {
    case FamilyKind::Z2pxZp:
      if (is(2 * p, 2 * p, p)) return ActionCase::AbelianPair;
      break;
    case FamilyKind::DpxZp:
      if (is(2, p, 2 * p)) return ActionCase::DihedralMixed;
      if (is(2 * p, 2 * p, p)) return ActionCase::DihedralEqual;
      break;
    case FamilyKind::Z2p2:
      if (is(2, q, 2 * q)) return ActionCase::CyclicInvolution;
      if (is(2 * q, 2 * q, p)) return ActionCase::CyclicOrderP;
      if (is(2 * p, q, 2 * q)) return ActionCase::CyclicMixed;
      if (is(2 * q, 2 * q, q)) return ActionCase::CyclicEqual;
      break;
    default: break;
  }
  return std::nullopt;
}

long long closed_form_genus(ActionCase c, int p) {
  const long long P = p;
  switch (c) {
    case ActionCase::AbelianPair:
    case ActionCase::DihedralEqual: return (P - 1) * (P - 1);
    case ActionCase::DihedralMixed: return (P - 2) * (P - 1) / 2;
    case ActionCase::CyclicInvolution: return (P * P - 1) / 2;
    case ActionCase::CyclicOrderP: return P * (P - 1);
    case ActionCase::CyclicMixed: return (P - 1) * (2 * P + 1) / 2;
    case ActionCase::CyclicEqual: return P * P - 1;
  }
  return 0;
}

std::vector<int> case_params(ActionCase c, int p) {
  std::vector<int> v;
  switch (c) {
    case ActionCase::DihedralEqual:
      for (int j = 0; j <= p - 2; ++j) v.push_back(j);
      break;
    case ActionCase::CyclicOrderP:
    case ActionCase::CyclicMixed:
      for (int m = 1; m <= p - 1; ++m) v.push_back(m);
      break;
    case ActionCase::CyclicEqual:
      for (int l = 1; l < p * p; ++l)
        if (l % p != 0 && (l + 1) % p != 0) v.push_back(l);
      break;
    default: v.push_back(0);
  }
  return v;
}

GeneratingTriple explicit_triple(ActionCase c, const FiniteGroup& g, int param) {
  const int p = g.family().p;
  const int q = p * p;
  auto T = [&](const std::string& x, const std::string& y, const std::string& z, TriangleSignature sig) {
    GeneratingTriple t{{g.eval(x), g.eval(y), g.eval(z)}, sig};
    if (!is_generating_triple(g, t))
      throw ContradictionError(fmt::format("{} with parameter {} is not a generating triple", to_string(c), param));
    return t;
  };
  switch (c) {
    case ActionCase::AbelianPair: return T("c b", "c a^-1 b^-1", "a", {{2 * p, 2 * p, p}});
    case ActionCase::DihedralMixed: return T("c", "a b^-1", "c a b", {{2, p, 2 * p}});
    case ActionCase::DihedralEqual:
      return T("c b", fmt::format("c a^-1 b^{}", -1 - param), fmt::format("a b^{}", param), {{2 * p, 2 * p, p}});
    case ActionCase::CyclicInvolution: return T("b", "a", "a^-1 b", {{2, q, 2 * q}});
    case ActionCase::CyclicOrderP:
      return T("a b", fmt::format("a^{} b", -1 - p * param), fmt::format("a^{}", p * param), {{2 * q, 2 * q, p}});
    case ActionCase::CyclicMixed:
      return T(fmt::format("a^{} b", p * param), "a", fmt::format("a^{} b", -1 - p * param), {{2 * p, q, 2 * q}});
    case ActionCase::CyclicEqual:
      return T("a b", fmt::format("a^{} b", -param - 1), fmt::format("a^{}", param), {{2 * q, 2 * q, q}});
  }
  throw Error("unknown action case");
}

int model_param(ActionCase c, int p, int param) {
  if (c == ActionCase::CyclicMixed) return (2 * param) % p;
  return param;
}

CensusReport classify(int p, const ClassifyOptions& opts) {
  if (p == 2 || !is_prime(p)) throw Error(fmt::format("p = {} is not an odd prime", p));
  if (p > kMaxDefaultPrime && !opts.allow_large_prime)
    throw Error(fmt::format("p = {} is beyond the supported range 3..{}; pass --max-prime-override", p,
                            kMaxDefaultPrime));
  Catalog cat(p, opts.jobs);
  CensusReport rep;
  rep.prime = p;
  std::map<DedupeKey, int> by_key;

  for (const auto& fam : cat.base_families()) {
    auto g = cat.group(fam);
    for (const auto& sig : admissible_triangular_signatures(*g)) {
      const auto disp = display_order(sig);
      const auto tc = action_case_for(fam, disp, p);
      const auto& auts = cat.automorphisms(*g);
      auto orbits = surface_classes(cat, *g, disp);

      std::map<GeneratingTriple, int> param_of;
      if (tc)
        for (int prm : case_params(*tc, p)) param_of[aut_canonical(auts, explicit_triple(*tc, *g, prm))] = prm;

      HypermapEntry hm{fam.name(), disp, 0, disp[0] == 2 || disp[1] == 2 || disp[2] == 2, {}};
      std::vector<int> cell_ids;

      for (const auto& orbit : orbits) {
        const auto full = full_action(cat, g, orbit.rep);
        const long long genus = orbit.genus;
        const auto key = dedupe_key(cat, full, genus);
        auto [it, fresh] = by_key.emplace(key, static_cast<int>(rep.surfaces.size()) + 1);
        const int id = it->second;
        for (const auto& m : orbit.members)
          hm.classes.push_back(HypermapClass{labels(*g, m.rep), is_reflexive(*g, m.rep, auts), id});

        auto& ssg = rep.strong_symmetric_genus[fam.name()];
        ssg = ssg == 0 ? genus : std::min(ssg, genus);

        if (!fresh) {
          rep.surfaces[id - 1].also_supported_by.push_back(fmt::format("{} {}", fam.name(), disp.str()));
          continue;
        }
        SurfaceRecord s;
        s.id = id;
        s.group = fam.name();
        s.signature = disp;
        s.triple = labels(*g, orbit.rep);
        s.genus = genus;
        s.full_group = full.group->family().name();
        s.full_order = full.group->order();
        s.full_signature = full.chain.empty() ? disp : table_display(full.triple.sig, p);
        s.full_triple = labels(*full.group, full.triple);
        for (const auto& step : full.chain)
          s.extension_chain.push_back(fmt::format("{} -> {}", step.row.label, step.group->family().name()));
        s.dedupe_key = key_string(key, *full.group);
        if (tc) {
          s.case_name = to_string(*tc);
          s.closed_form_genus = closed_form_genus(*tc, p);
          for (const auto& m : orbit.members) {
            auto pit = param_of.find(m.rep);
            if (pit == param_of.end())
              throw ContradictionError(fmt::format("{} class {} matches no closed-form triple", s.case_name,
                                                   fmt::join(labels(*g, m.rep), ", ")));
            s.params.push_back(pit->second);
          }
        }

        auto h = model_subgroup(*g, orbit.rep, p);
        if (!h) throw ContradictionError(fmt::format("surface {} has no cyclic p- or p²-gonal normal subgroup", id));
        s.model.derived = derive_model(*g, orbit.rep, *h);
        s.model.gonality = s.model.derived.n;
        s.model.equation = s.model.derived.render();
        if (tc) {
          s.model.closed_form = closed_form_model(*tc, p, model_param(*tc, p, s.params.front()));
          s.model.matches_closed_form = models_equivalent(s.model.derived, *s.model.closed_form);
        }
        s.pgonal_subgroups =
            static_cast<int>(gonal_subgroups(*full.group, full.triple, s.model.gonality, false).size());
        s.hyperelliptic = is_hyperelliptic(*full.group, full.triple);
        rep.surfaces.push_back(std::move(s));
        cell_ids.push_back(id);
      }

      // One row per full automorphism group reached from this cell, largest first.
      std::vector<CensusRow> rows;
      for (int id : cell_ids) {
        const auto& s = rep.surfaces[id - 1];
        auto r = std::find_if(rows.begin(), rows.end(), [&](const CensusRow& row) {
          return row.full_group == s.full_group && row.full_signature == s.full_signature;
        });
        if (r == rows.end()) {
          rows.push_back(CensusRow{s.group, s.signature, 0, s.full_group, s.full_order, s.full_signature, s.genus, {}});
          r = rows.end() - 1;
        }
        ++r->count;
        r->surfaces.push_back(id);
      }
      std::stable_sort(rows.begin(), rows.end(),
                       [](const CensusRow& a, const CensusRow& b) { return a.full_order > b.full_order; });
      rep.rows.insert(rep.rows.end(), rows.begin(), rows.end());

      hm.count = static_cast<int>(hm.classes.size());
      if (hm.count > 0) rep.hypermaps.push_back(std::move(hm));
    }
  }
  rep.total_surfaces = static_cast<int>(by_key.size());
  for (const auto& h : rep.hypermaps) rep.total_hypermaps += h.count;
  for (const auto& r : rep.rows)
    if (r.genus != riemann_hurwitz_genus(r.full_order, r.full_signature))
      throw ContradictionError(fmt::format("row {} {} fails Riemann-Hurwitz for its full group", r.group,
                                           r.signature.str()));
  return rep;
}

HypermapReport hypermap_report(const CensusReport& report) {
  HypermapReport h{report.prime, report.hypermaps, report.total_hypermaps};
  return h;
}

HypermapReport hypermap_census(int p, const ClassifyOptions& opts) { return hypermap_report(classify(p, opts)); }

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "markdown" || s == "md") return Format::Markdown;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON

using ojson = nlohmann::ordered_json;

namespace {

ojson sig_json(const TriangleSignature& s) { return ojson::array({s[0], s[1], s[2]}); }
TriangleSignature sig_from(const ojson& j) { return TriangleSignature{{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}}; }

const char* kind_name(CoverFactor::Kind k) {
  switch (k) {
    case CoverFactor::Kind::Monomial: return "x";
    case CoverFactor::Kind::MinusOne: return "x^d-1";
    case CoverFactor::Kind::PlusOne: return "x^d+1";
  }
  return "?";
}

CoverFactor::Kind kind_from(const std::string& s) {
  if (s == "x") return CoverFactor::Kind::Monomial;
  if (s == "x^d-1") return CoverFactor::Kind::MinusOne;
  if (s == "x^d+1") return CoverFactor::Kind::PlusOne;
  throw Error("unknown factor kind " + s);
}

ojson model_json(const CyclicCoverModel& m) {
  ojson f = ojson::array();
  for (const auto& x : m.factors) f.push_back({{"kind", kind_name(x.kind)}, {"degree", x.degree}, {"exponent", x.exponent}});
  ojson params = ojson::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  return {{"n", m.n}, {"equation", m.render()}, {"factors", f}, {"infinity_exponent", m.infinity_exponent}, {"params", params}};
}

CyclicCoverModel model_from(const ojson& j) {
  CyclicCoverModel m;
  m.n = j.at("n");
  for (const auto& f : j.at("factors")) m.factors.push_back(CoverFactor{kind_from(f.at("kind")), f.at("degree"), f.at("exponent")});
  m.infinity_exponent = j.at("infinity_exponent");
  for (const auto& [k, v] : j.at("params").items()) m.params[k] = v.get<int>();
  return m;
}

ojson triple_json(const std::array<std::string, 3>& t) { return ojson::array({t[0], t[1], t[2]}); }
std::array<std::string, 3> triple_from(const ojson& j) { return {j.at(0), j.at(1), j.at(2)}; }

ojson hypermap_json(const HypermapEntry& h) {
  ojson classes = ojson::array();
  for (const auto& c : h.classes)
    classes.push_back({{"triple", triple_json(c.triple)}, {"reflexive", c.reflexive}, {"surface", c.surface}});
  return {{"group", h.group}, {"type", sig_json(h.type)}, {"count", h.count}, {"is_map", h.is_map}, {"classes", classes}};
}

HypermapEntry hypermap_from(const ojson& j) {
  HypermapEntry h{j.at("group"), sig_from(j.at("type")), j.at("count"), j.at("is_map"), {}};
  for (const auto& c : j.at("classes")) h.classes.push_back(HypermapClass{triple_from(c.at("triple")), c.at("reflexive"), c.at("surface")});
  return h;
}

ojson report_json(const CensusReport& r) {
  ojson j;
  j["schema_version"] = r.schema_version;
  j["tool_version"] = r.tool_version;
  if (r.generated_at) j["generated_at"] = *r.generated_at;
  j["prime"] = r.prime;
  j["total_surfaces"] = r.total_surfaces;
  j["total_hypermaps"] = r.total_hypermaps;
  j["rows"] = ojson::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"group", row.group},
                         {"signature", sig_json(row.signature)},
                         {"count", row.count},
                         {"full_group", row.full_group},
                         {"full_order", row.full_order},
                         {"full_signature", sig_json(row.full_signature)},
                         {"genus", row.genus},
                         {"surfaces", row.surfaces}});
  j["surfaces"] = ojson::array();
  for (const auto& s : r.surfaces) {
    ojson m{{"gonality", s.model.gonality},
            {"equation", s.model.equation},
            {"derived", model_json(s.model.derived)},
            {"closed_form", s.model.closed_form ? model_json(*s.model.closed_form) : ojson(nullptr)},
            {"matches_closed_form", s.model.matches_closed_form}};
    j["surfaces"].push_back({{"id", s.id},
                             {"group", s.group},
                             {"signature", sig_json(s.signature)},
                             {"case", s.case_name},
                             {"params", s.params},
                             {"triple", triple_json(s.triple)},
                             {"genus", s.genus},
                             {"closed_form_genus", s.closed_form_genus},
                             {"full_group", s.full_group},
                             {"full_order", s.full_order},
                             {"full_signature", sig_json(s.full_signature)},
                             {"full_triple", triple_json(s.full_triple)},
                             {"extension_chain", s.extension_chain},
                             {"dedupe_key", s.dedupe_key},
                             {"model", m},
                             {"pgonal_subgroups", s.pgonal_subgroups},
                             {"hyperelliptic", s.hyperelliptic},
                             {"also_supported_by", s.also_supported_by}});
  }
  j["hypermaps"] = ojson::array();
  for (const auto& h : r.hypermaps) j["hypermaps"].push_back(hypermap_json(h));
  j["strong_symmetric_genus"] = ojson::object();
  for (const auto& [k, v] : r.strong_symmetric_genus) j["strong_symmetric_genus"][k] = v;
  return j;
}

}  // namespace

CensusReport census_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw Error(std::string("invalid census JSON: ") + e.what());
  }
  CensusReport r;
  r.schema_version = j.at("schema_version");
  if (r.schema_version != kSchemaVersion) throw Error(fmt::format("unsupported schema version {}", r.schema_version));
  r.tool_version = j.at("tool_version");
  if (j.contains("generated_at")) r.generated_at = j.at("generated_at").get<std::string>();
  r.prime = j.at("prime");
  r.total_surfaces = j.at("total_surfaces");
  r.total_hypermaps = j.at("total_hypermaps");
  for (const auto& row : j.at("rows"))
    r.rows.push_back(CensusRow{row.at("group"), sig_from(row.at("signature")), row.at("count"), row.at("full_group"),
                               row.at("full_order"), sig_from(row.at("full_signature")), row.at("genus"),
                               row.at("surfaces").get<std::vector<int>>()});
  for (const auto& x : j.at("surfaces")) {
    SurfaceRecord s;
    s.id = x.at("id");
    s.group = x.at("group");
    s.signature = sig_from(x.at("signature"));
    s.case_name = x.at("case");
    s.params = x.at("params").get<std::vector<int>>();
    s.triple = triple_from(x.at("triple"));
    s.genus = x.at("genus");
    s.closed_form_genus = x.at("closed_form_genus");
    s.full_group = x.at("full_group");
    s.full_order = x.at("full_order");
    s.full_signature = sig_from(x.at("full_signature"));
    s.full_triple = triple_from(x.at("full_triple"));
    s.extension_chain = x.at("extension_chain").get<std::vector<std::string>>();
    s.dedupe_key = x.at("dedupe_key");
    const auto& m = x.at("model");
    s.model.gonality = m.at("gonality");
    s.model.equation = m.at("equation");
    s.model.derived = model_from(m.at("derived"));
    if (!m.at("closed_form").is_null()) s.model.closed_form = model_from(m.at("closed_form"));
    s.model.matches_closed_form = m.at("matches_closed_form");
    s.pgonal_subgroups = x.at("pgonal_subgroups");
    s.hyperelliptic = x.at("hyperelliptic");
    s.also_supported_by = x.at("also_supported_by").get<std::vector<std::string>>();
    r.surfaces.push_back(std::move(s));
  }
  for (const auto& h : j.at("hypermaps")) r.hypermaps.push_back(hypermap_from(h));
  for (const auto& [k, v] : j.at("strong_symmetric_genus").items()) r.strong_symmetric_genus[k] = v.get<long long>();
  return r;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const CensusReport& r, Format format) {
  if (format == Format::Json) return report_json(r).dump(2) + "\n";
  const int p = r.prime;
  std::string out = fmt::format("# Triangular actions of groups of order 2p², p = {}\n\n", p);
  out += "| G | sig.G | #S | Aut(S) | sig.Aut(S) | genus |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    const bool extended = row.full_order != 2 * p * p;
    out += fmt::format("| {} | {} | {} | {} | {} | {} |\n", pretty_family_name(row.group, p), row.signature.symbolic(p),
                       row.count, pretty_family_name(row.full_group, p),
                       extended ? row.full_signature.symbolic(p) : "", row.genus);
  }
  out += fmt::format("\nTotal surfaces: {}\n", r.total_surfaces);
  out += fmt::format("Total orientably-regular hypermaps: {}\n\n", r.total_hypermaps);
  out += "## Surfaces\n\n";
  out += "| # | G | sig.G | params | genus | Aut(S) | model | p-gonal groups | also acted on by |\n";
  out += "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& s : r.surfaces) {
    out += fmt::format("| {} | {} | {} | {} | {} | {} | `{}` | {} | {} |\n", s.id, pretty_family_name(s.group, p),
                       s.signature.symbolic(p), fmt::join(s.params, ","), s.genus,
                       pretty_family_name(s.full_group, p), s.model.equation, s.pgonal_subgroups,
                       fmt::join(s.also_supported_by, "; "));
  }
  out += "\n## Hypermaps\n\n";
  out += "| G | type | count | reflexive | surfaces |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& h : r.hypermaps) {
    int refl = 0;
    std::vector<int> surf;
    for (const auto& c : h.classes) {
      refl += c.reflexive;
      surf.push_back(c.surface);
    }
    out += fmt::format("| {} | {} | {} | {} | {} |\n", pretty_family_name(h.group, p), h.type.symbolic(p), h.count, refl,
                       fmt::join(surf, ","));
  }
  return out;
}

std::string render(const HypermapReport& r, Format format) {
  if (format == Format::Json) {
    ojson j{{"schema_version", kSchemaVersion}, {"prime", r.prime}, {"total", r.total}, {"entries", ojson::array()}};
    for (const auto& h : r.entries) j["entries"].push_back(hypermap_json(h));
    return j.dump(2) + "\n";
  }
  std::string out = fmt::format("# Orientably-regular hypermaps, p = {}\n\n", r.prime);
  out += "| G | type | count | reflexive | map | surfaces |\n|---|---|---|---|---|---|\n";
  for (const auto& h : r.entries) {
    int refl = 0;
    std::vector<int> surf;
    for (const auto& c : h.classes) {
      refl += c.reflexive;
      surf.push_back(c.surface);
    }
    out += fmt::format("| {} | {} | {} | {} | {} | {} |\n", pretty_family_name(h.group, r.prime), h.type.symbolic(r.prime),
                       h.count, refl, h.is_map ? "yes" : "no", fmt::join(surf, ","));
  }
  out += fmt::format("\nTotal: {}\n", r.total);
  return out;
}

std::vector<std::string> invariant_violations(const CensusReport& r) {
  std::vector<std::string> bad;
  const int p = r.prime;
  const long long P = p, Q = P * P;
  auto need = [&](bool ok, std::string what) {
    if (!ok) bad.push_back(std::move(what));
  };

  const int total = p == 3 ? 8 : (p * p + 2 * p + 3) / 2;
  need(r.total_surfaces == total, fmt::format("total surfaces {} != {}", r.total_surfaces, total));
  need(static_cast<int>(r.surfaces.size()) == r.total_surfaces, "surface list size differs from total");
  need(r.total_hypermaps == p * p + p || p == 3, fmt::format("total hypermaps {} != p²+p", r.total_hypermaps));

  // (group, signature, full order) -> (count, genus)
  using Cell = std::tuple<std::string, TriangleSignature, int>;
  const int q = p * p;
  std::map<Cell, std::pair<int, long long>> want;
  if (p > 3) want[{"DpxZp", TriangleSignature{{2, p, 2 * p}}, 6 * q}] = {1, (P - 2) * (P - 1) / 2};
  want[{"DpxZp", TriangleSignature{{2 * p, 2 * p, p}}, 8 * q}] = {1, (P - 1) * (P - 1)};
  want[{"DpxZp", TriangleSignature{{2 * p, 2 * p, p}}, 4 * q}] = {1, (P - 1) * (P - 1)};
  if (p > 3) want[{"DpxZp", TriangleSignature{{2 * p, 2 * p, p}}, 2 * q}] = {(p - 3) / 2, (P - 1) * (P - 1)};
  want[{"Z2p2", TriangleSignature{{2, q, 2 * q}}, 2 * q}] = {1, (Q - 1) / 2};
  want[{"Z2p2", TriangleSignature{{2 * q, 2 * q, p}}, 2 * q}] = {(p - 1) / 2, P * (P - 1)};
  want[{"Z2p2", TriangleSignature{{2 * p, q, 2 * q}}, 2 * q}] = {p - 1, (P - 1) * (2 * P + 1) / 2};
  want[{"Z2p2", TriangleSignature{{2 * q, 2 * q, q}}, 2 * q}] = {(q - 2 * p - 1) / 2, Q - 1};
  want[{"Z2p2", TriangleSignature{{2 * q, 2 * q, q}}, 8 * q}] = {1, Q - 1};
  std::map<Cell, std::pair<int, long long>> got;
  for (const auto& row : r.rows) got[{row.group, row.signature, row.full_order}] = {row.count, row.genus};
  for (const auto& [cell, v] : want) {
    auto it = got.find(cell);
    const auto& [g, sig, order] = cell;
    if (it == got.end()) {
      need(false, fmt::format("missing row {} {} |Aut|={}", g, sig.str(), order));
      continue;
    }
    need(it->second.first == v.first,
         fmt::format("row {} {} |Aut|={}: count {} != {}", g, sig.str(), order, it->second.first, v.first));
    need(it->second.second == v.second,
         fmt::format("row {} {} |Aut|={}: genus {} != {}", g, sig.str(), order, it->second.second, v.second));
  }
  for (const auto& [cell, v] : got)
    need(want.count(cell) > 0, fmt::format("unexpected row {} {} |Aut|={}", std::get<0>(cell),
                                           std::get<1>(cell).str(), std::get<2>(cell)));

  bool shared = false;
  for (const auto& s : r.surfaces) {
    need(s.model.matches_closed_form, fmt::format("surface {}: model differs from closed form", s.id));
    need(s.genus == s.closed_form_genus, fmt::format("surface {}: genus {} != {}", s.id, s.genus, s.closed_form_genus));
    if (s.group == "DpxZp")
      for (const auto& a : s.also_supported_by) shared = shared || a.starts_with("Z2pxZp");
  }
  need(shared, "no DpxZp surface also carries the Z2pxZp action");

  std::map<std::string, long long> ssg = {{"DpxZp", p > 3 ? (P - 2) * (P - 1) / 2 : (P - 1) * (P - 1)},
                                          {"Z2pxZp", (P - 1) * (P - 1)},
                                          {"Z2p2", (Q - 1) / 2}};
  need(r.strong_symmetric_genus == ssg, "strong symmetric genus differs from the table");
  return bad;
}

}  // namespace trisurf

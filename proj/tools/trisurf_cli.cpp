// Command-line front end: census, ske classes, extensions, curve models,
// hypermaps and the invariant self-check.

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trisurf/census.hpp"

using namespace trisurf;
using nlohmann::ordered_json;

namespace {

constexpr int kExitContradiction = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::string format = "markdown";
  std::string out;
  bool max_prime_override = false;
  int jobs = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Format format_of(const Globals& g) {
  auto f = parse_format(g.format);
  if (!f) throw UsageError(fmt::format("unknown format '{}' (json or markdown)", g.format));
  return *f;
}

void check_prime(int p, const Globals& g) {
  if (p < 3 || !is_prime(p)) throw UsageError(fmt::format("p = {} is not an odd prime", p));
  if (p > kMaxDefaultPrime && !g.max_prime_override)
    throw UsageError(fmt::format("p = {} exceeds {}; pass --max-prime-override", p, kMaxDefaultPrime));
}

TriangleSignature parse_sig(const std::string& text) {
  TriangleSignature s;
  std::stringstream in(text);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i == 3) throw UsageError("signature needs exactly three periods");
    try {
      s.periods[i++] = std::stoi(part);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("bad period '{}'", part));
    }
  }
  if (i != 3) throw UsageError("signature needs exactly three periods");
  return s;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError(fmt::format("cannot write {}", g.out));
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::array<std::string, 3> labels(const FiniteGroup& g, const GeneratingTriple& t) {
  return {g.label(t[0]), g.label(t[1]), g.label(t[2])};
}

std::string triple_str(const std::array<std::string, 3>& t) { return fmt::format("({}, {}, {})", t[0], t[1], t[2]); }

ordered_json sig_json(const TriangleSignature& s) { return ordered_json(s.periods); }

int run_census(const Globals& g, int p, bool timestamp) {
  check_prime(p, g);
  auto report = classify(p, {g.jobs, g.max_prime_override});
  if (timestamp)
    report.generated_at = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(
                                                                     std::chrono::system_clock::now())));
  emit(g, render(report, format_of(g)));
  return 0;
}

int run_hypermaps(const Globals& g, int p) {
  check_prime(p, g);
  emit(g, render(hypermap_census(p, {g.jobs, g.max_prime_override}), format_of(g)));
  return 0;
}

int run_skes(const Globals& g, int p, const std::string& group, const std::string& sig_text) {
  check_prime(p, g);
  Catalog cat(p, g.jobs);
  auto grp = cat.group(parse_family(group, p));
  auto sig = parse_sig(sig_text);
  const auto& auts = cat.automorphisms(*grp);
  const auto& ts = cat.triples(*grp, sig);
  auto classes = aut_classes(*grp, ts, auts);
  std::vector<SurfaceOrbit> surfaces;
  if (!ts.empty()) surfaces = surface_classes(*grp, sig, ts, auts);
  auto surface_of = [&](const GeneratingTriple& rep) {
    for (std::size_t i = 0; i < surfaces.size(); ++i)
      for (const auto& m : surfaces[i].members)
        if (m.rep == rep) return static_cast<int>(i + 1);
    return 0;
  };

  if (format_of(g) == Format::Json) {
    ordered_json j;
    j["group"] = grp->family().name();
    j["prime"] = p;
    j["signature"] = sig_json(sig);
    j["triples"] = ts.size();
    j["aut_order"] = auts.size();
    j["classes"] = ordered_json::array();
    for (const auto& c : classes)
      j["classes"].push_back({{"triple", labels(*grp, c.rep)},
                              {"orbit_size", c.orbit_size},
                              {"genus", c.genus},
                              {"reflexive", is_reflexive(*grp, c.rep, auts)},
                              {"surface", surface_of(c.rep)}});
    j["surfaces"] = surfaces.size();
    emit(g, j.dump(2));
    return 0;
  }
  std::string out = fmt::format("# {} on {}, p = {}\n\n", grp->family().pretty(), sig.str(), p);
  out += fmt::format("{} generating triples, |Aut(G)| = {}, {} classes, {} surfaces\n\n", ts.size(), auts.size(),
                     classes.size(), surfaces.size());
  out += "| # | triple | orbit | genus | reflexive | surface |\n|---|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    out += fmt::format("| {} | {} | {} | {} | {} | {} |\n", i + 1, triple_str(labels(*grp, c.rep)), c.orbit_size,
                       c.genus, is_reflexive(*grp, c.rep, auts) ? "yes" : "no", surface_of(c.rep));
  }
  emit(g, out);
  return 0;
}

int run_extend(const Globals& g, int p, const std::string& group, const std::string& sig_text) {
  check_prime(p, g);
  Catalog cat(p, g.jobs);
  auto grp = cat.group(parse_family(group, p));
  auto sig = parse_sig(sig_text);
  auto surfaces = surface_classes(cat, *grp, sig);

  ordered_json j = ordered_json::array();
  std::string md = fmt::format("# Full actions of {} on {}, p = {}\n\n", grp->family().pretty(), sig.str(), p);
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    const auto& s = surfaces[i];
    auto full = full_action(cat, grp, s.rep);
    auto key = dedupe_key(cat, full, s.genus);
    ordered_json chain = ordered_json::array();
    md += fmt::format("## Surface {} (genus {})\n\ntriple {}\n", i + 1, s.genus, triple_str(labels(*grp, s.rep)));
    for (const auto& step : full.chain) {
      chain.push_back({{"row", step.row.label},
                       {"rotation", step.rotation},
                       {"group", step.group->family().name()},
                       {"order", step.group->order()},
                       {"triple", labels(*step.group, step.triple)}});
      md += fmt::format("- {} (rotation {}): {} of order {}, triple {}\n", step.row.label, step.rotation,
                        step.group->family().pretty(), step.group->order(),
                        triple_str(labels(*step.group, step.triple)));
    }
    if (full.chain.empty()) md += "- no extension: the action is full\n";
    md += fmt::format("\nfull group {} of order {}, signature {}\n\n", full.group->family().pretty(),
                      full.group->order(), full.triple.sig.str());
    j.push_back({{"surface", i + 1},
                 {"genus", s.genus},
                 {"triple", labels(*grp, s.rep)},
                 {"full_group", full.group->family().name()},
                 {"full_order", full.group->order()},
                 {"full_signature", sig_json(full.triple.sig)},
                 {"full_triple", labels(*full.group, key.full_triple)},
                 {"chain", chain}});
  }
  emit(g, format_of(g) == Format::Json ? j.dump(2) : md);
  return 0;
}

int run_curve(const Globals& g, int p, const std::string& case_name, int param, const std::string& exps) {
  if (!exps.empty()) {
    // n:e1,e2,...
    auto colon = exps.find(':');
    if (colon == std::string::npos) throw UsageError("--exponents expects n:e1,e2,...");
    int n = 0;
    std::vector<int> es;
    try {
      n = std::stoi(exps.substr(0, colon));
      std::stringstream in(exps.substr(colon + 1));
      std::string part;
      while (std::getline(in, part, ',')) es.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("--exponents expects n:e1,e2,...");
    }
    long long genus = ngonal_genus(n, es);
    emit(g, format_of(g) == Format::Json ? ordered_json{{"n", n}, {"exponents", es}, {"genus", genus}}.dump(2)
                                         : fmt::format("genus {}\n", genus));
    return 0;
  }
  check_prime(p, g);
  auto tc = parse_action_case(case_name);
  if (!tc) throw UsageError(fmt::format("unknown case '{}' (see --help)", case_name));
  auto params = case_params(*tc, p);
  if (std::find(params.begin(), params.end(), param) == params.end())
    throw UsageError(fmt::format("parameter {} out of range for {}", param, case_name));
  auto closed = closed_form_model(*tc, p, model_param(*tc, p, param));

  auto family = *tc == ActionCase::AbelianPair   ? FamilyKind::Z2pxZp
                : *tc <= ActionCase::DihedralEqual ? FamilyKind::DpxZp
                                           : FamilyKind::Z2p2;
  auto grp = build_group(family, p);
  auto t = explicit_triple(*tc, *grp, param);
  auto h = model_subgroup(*grp, t, p);
  std::optional<CyclicCoverModel> derived;
  if (h) derived = derive_model(*grp, t, *h);
  bool same = derived && models_equivalent(*derived, closed);

  if (format_of(g) == Format::Json) {
    ordered_json j{{"case", to_string(*tc)},
                   {"prime", p},
                   {"param", param},
                   {"triple", labels(*grp, t)},
                   {"closed_form", closed.render()},
                   {"closed_form_genus", ngonal_genus(closed)}};
    j["derived"] = derived ? ordered_json(derived->render()) : ordered_json(nullptr);
    j["subgroup"] = h ? ordered_json(grp->label(*h)) : ordered_json(nullptr);
    j["equivalent"] = same;
    emit(g, j.dump(2));
  } else {
    std::string out = fmt::format("{} p = {} param = {}\ntriple {}\nclosed form: {} (genus {})\n", to_string(*tc), p,
                                  param, triple_str(labels(*grp, t)), closed.render(), ngonal_genus(closed));
    if (derived)
      out += fmt::format("derived over <{}>: {}\nequivalent: {}\n", grp->label(*h), derived->render(),
                         same ? "yes" : "no");
    else
      out += "no normal gonal subgroup of order p or p²\n";
    emit(g, out);
  }
  return 0;
}

int run_selfcheck(const Globals& g, const std::vector<int>& primes) {
  std::string out;
  bool ok = true;
  for (int p : primes) {
    check_prime(p, g);
    auto report = classify(p, {g.jobs, g.max_prime_override});
    auto bad = invariant_violations(report);
    if (auto hm = hypermap_report(report); hm.total != report.total_hypermaps)
      bad.push_back("hypermap total differs between reports");
    out += fmt::format("p = {}: {} surfaces, {} hypermaps, {}\n", p, report.total_surfaces, report.total_hypermaps,
                       bad.empty() ? "ok" : fmt::format("{} violations", bad.size()));
    for (const auto& b : bad) out += fmt::format("  {}\n", b);
    ok = ok && bad.empty();
  }
  emit(g, out);
  return ok ? 0 : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular actions of groups of order 2p² on Riemann surfaces"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: json or markdown")->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_flag("--max-prime-override", g.max_prime_override, "Allow primes above the default limit");
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration (0: runtime default)")->check(CLI::NonNegativeNumber);

  int p = 0;
  std::string group, sig, case_name = "abelian-pair", exps;
  int param = 0;
  bool timestamp = false;
  std::vector<int> primes{3, 5, 7};

  auto* census = app.add_subcommand("census", "Classify all surfaces for one prime");
  census->add_option("-p,--prime", p, "Odd prime")->required();
  census->add_flag("--timestamp", timestamp, "Record the generation time in the report");

  auto* skes = app.add_subcommand("skes", "Aut-classes of generating triples of one group and signature");
  skes->add_option("-p,--prime", p, "Odd prime")->required();
  skes->add_option("--group", group, "Group family, e.g. DpxZp or Z2p2")->required();
  skes->add_option("--sig", sig, "Signature a,b,c")->required();

  auto* extend = app.add_subcommand("extend", "Full automorphism group of each surface class");
  extend->add_option("-p,--prime", p, "Odd prime")->required();
  extend->add_option("--group", group, "Group family")->required();
  extend->add_option("--sig", sig, "Signature a,b,c")->required();

  auto* curve = app.add_subcommand("curve", "Cyclic cover models");
  curve->add_option("-p,--prime", p, "Odd prime");
  curve->add_option("--case", case_name, "abelian-pair, dihedral-mixed, dihedral-equal, cyclic-involution, cyclic-order-p, cyclic-mixed, cyclic-equal")->capture_default_str();
  curve->add_option("--param", param, "j, m, n or l")->capture_default_str();
  curve->add_option("--exponents", exps, "Genus of y^n = prod (x - a_i)^e_i, given as n:e1,e2,...");

  auto* hyper = app.add_subcommand("hypermaps", "Orientably-regular hypermaps");
  hyper->add_option("-p,--prime", p, "Odd prime")->required();

  auto* self = app.add_subcommand("selfcheck", "Run the invariant suite");
  self->add_option("-p,--primes", primes, "Primes to check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*census) return run_census(g, p, timestamp);
    if (*skes) return run_skes(g, p, group, sig);
    if (*extend) return run_extend(g, p, group, sig);
    if (*curve) return run_curve(g, p, case_name, param, exps);
    if (*hyper) return run_hypermaps(g, p);
    if (*self) return run_selfcheck(g, primes);
  } catch (const ContradictionError& e) {
    std::cerr << "contradiction: " << e.what() << '\n';
    return kExitContradiction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

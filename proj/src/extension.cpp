#include "trisurf/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace trisurf {

namespace {

// A word in y1, y2, y3 such as "y2 y3^-1".
std::vector<std::pair<int, int>> parse_row_word(const std::string& w) {
  std::vector<std::pair<int, int>> out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == ' ') {
      ++i;
      continue;
    }
    if (w[i] != 'y' || i + 1 >= w.size() || w[i + 1] < '1' || w[i + 1] > '3')
      throw Error(fmt::format("bad inclusion word '{}'", w));
    int sym = w[i + 1] - '1';
    i += 2;
    int e = 1;
    if (i < w.size() && w[i] == '^') {
      std::size_t used = 0;
      e = std::stoi(w.substr(i + 1), &used);
      i += 1 + used;
    }
    out.emplace_back(sym, e);
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

InclusionRow InclusionRow::normal_aab(int a, int b) {
  InclusionRow r;
  r.source = TriangleSignature{{a, a, b}};
  r.target = TriangleSignature{{2, a, 2 * b}};
  r.index = 2;
  r.normal = true;
  r.words = {"y2", "y3 y2 y3^-1", "y3^2"};
  r.label = fmt::format("{} ⊴₂ {}", r.source.str(), r.target.str());
  return r;
}

InclusionRow InclusionRow::nonnormal_2n2n(int n) {
  InclusionRow r;
  r.source = TriangleSignature{{2, n, 2 * n}};
  r.target = TriangleSignature{{2, 3, 2 * n}};
  r.index = 3;
  r.normal = false;
  r.words = {"y2 y1 y2^-1", "y2^-1 y3^2 y2", "y3"};
  r.label = fmt::format("{} ≤₃ {}", r.source.str(), r.target.str());
  return r;
}

bool InclusionRow::index_consistent() const {
  auto ts = hyperbolic_area(target);
  return ts > 0 && hyperbolic_area(source) / ts == Rational(index);
}

std::array<Elem, 3> InclusionRow::restrict(const FiniteGroup& g, const GeneratingTriple& y) const {
  std::array<Elem, 3> x{};
  for (int i = 0; i < 3; ++i) {
    Elem acc = g.identity();
    for (auto [sym, e] : parse_row_word(words[i])) acc = g.mul(acc, g.pow(y[sym], e));
    x[i] = acc;
  }
  return x;
}

std::vector<InclusionRow> rows_from(const TriangleSignature& sig) {
  std::vector<InclusionRow> out;
  if (sig[0] == sig[1]) {
    auto r = InclusionRow::normal_aab(sig[0], sig[2]);
    if (r.target.is_hyperbolic()) out.push_back(r);
  }
  if (sig[0] == 2 && sig[2] == 2 * sig[1]) {
    auto r = InclusionRow::nonnormal_2n2n(sig[1]);
    if (r.target.is_hyperbolic()) out.push_back(r);
  }
  return out;
}

GeneratingTriple rotate(const GeneratingTriple& t, int k) {
  GeneratingTriple r = t;
  for (int s = 0; s < ((k % 3) + 3) % 3; ++s) {
    r.elems = {r.elems[1], r.elems[2], r.elems[0]};
    r.sig.periods = {r.sig.periods[1], r.sig.periods[2], r.sig.periods[0]};
  }
  return r;
}

GeneratingTriple twist_action(const FiniteGroup& g, const GeneratingTriple& t) {
  if (!t.sig.is_aab()) throw Error(fmt::format("twist needs an (a,a,b) signature, got {}", t.sig.str()));
  return GeneratingTriple{{t[1], g.conj(t[2], t[0]), t[2]}, t.sig};
}

GeneratingTriple surface_canonical(const FiniteGroup& g, const std::vector<Automorphism>& auts,
                                   const GeneratingTriple& t) {
  GeneratingTriple best = aut_canonical(auts, t);
  if (t.sig.is_aab()) best = std::min(best, aut_canonical(auts, twist_action(g, t)));
  return best;
}

std::vector<SurfaceOrbit> surface_classes(const FiniteGroup& g, const TriangleSignature& sig,
                                          const std::vector<GeneratingTriple>& triples,
                                          const std::vector<Automorphism>& auts) {
  auto classes = aut_classes(g, triples, auts);
  const int n = static_cast<int>(classes.size());
  UnionFind uf(n);
  if (sig.is_aab()) {
    for (int i = 0; i < n; ++i) {
      auto image = aut_canonical(auts, twist_action(g, classes[i].rep));
      auto it = std::lower_bound(classes.begin(), classes.end(), image,
                                 [](const SkeClass& c, const GeneratingTriple& x) { return c.rep < x; });
      if (it == classes.end() || it->rep != image) throw ContradictionError("twist left the triple set");
      uf.unite(i, static_cast<int>(it - classes.begin()));
    }
  }
  std::vector<SurfaceOrbit> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int root = uf.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.push_back(SurfaceOrbit{classes[i].rep, {}, classes[i].genus});
    }
    out[slot[root]].members.push_back(classes[i]);
  }
  return out;
}

std::vector<SurfaceOrbit> surface_classes(Catalog& cat, const FiniteGroup& g, const TriangleSignature& sig) {
  const auto& triples = cat.triples(g, sig);
  if (triples.empty()) return {};
  return surface_classes(g, sig, triples, cat.automorphisms(g));
}

std::optional<GeneratingTriple> extend_action(Catalog& cat, const FiniteGroup& g, const GeneratingTriple& t,
                                              const InclusionRow& row, const FiniteGroup& over) {
  if (t.sig != row.source) throw Error("triple does not match the row's source signature");
  if (over.order() != row.index * g.order()) return std::nullopt;
  std::vector<Elem> map;
  const std::array<Elem, 2> imgs{t[0], t[1]};
  for (const auto& big : cat.triples(over, row.target)) {
    auto r = row.restrict(over, big);
    if (over.element_order(r[0]) != row.source[0] || over.element_order(r[1]) != row.source[1]) continue;
    const std::array<Elem, 2> gens{r[0], r[1]};
    if (!extend_monomorphism(over, g, gens, imgs, map)) continue;
    if (std::count_if(map.begin(), map.end(), [](Elem e) { return e >= 0; }) != g.order()) continue;
    return big;
  }
  return std::nullopt;
}

FullAction full_action(Catalog& cat, GroupPtr g, const GeneratingTriple& t) {
  FullAction res{g, t, {}};
  for (;;) {
    std::vector<ExtensionStep> found;
    for (int k = 0; k < 3; ++k) {
      auto tr = rotate(res.triple, k);
      for (const auto& row : rows_from(tr.sig))
        for (const auto& fam : cat.overgroups(row.index * res.group->order())) {
          auto over = cat.group(fam);
          if (auto e = extend_action(cat, *res.group, tr, row, *over)) found.push_back({over, *e, row, k});
        }
    }
    if (found.empty()) break;
    for (std::size_t i = 1; i < found.size(); ++i) {
      const auto& a = *found[0].group;
      const auto& b = *found[i].group;
      if (a.family() != b.family() && !find_isomorphism(a, b))
        throw ContradictionError(fmt::format("action of {} extends to both {} and {}", res.group->family().tag(),
                                             a.family().tag(), b.family().tag()));
    }
    res.group = found[0].group;
    res.triple = found[0].triple;
    res.chain.push_back(found[0]);
  }
  return res;
}

bool bcc_n8_check(const FiniteGroup& g, const GeneratingTriple& t, const std::vector<Automorphism>& auts) {
  if (!t.sig.is_aab()) throw Error(fmt::format("bcc check needs an (a,a,b) signature, got {}", t.sig.str()));
  return std::any_of(auts.begin(), auts.end(), [&](const Automorphism& a) {
    if (a(t[0]) != t[1]) return false;
    for (const auto& [name, s] : g.generators())
      if (a(a(s)) != s) return false;
    return true;
  });
}

bool twist_realized(const FiniteGroup& g, const GeneratingTriple& t, const std::vector<Automorphism>& auts) {
  auto s = twist_action(g, t);
  return std::any_of(auts.begin(), auts.end(),
                     [&](const Automorphism& a) { return a(t[0]) == s[0] && a(t[1]) == s[1]; });
}

DedupeKey dedupe_key(Catalog& cat, const FullAction& full, long long genus) {
  const auto& g = *full.group;
  const auto& auts = cat.automorphisms(g);
  // Closure of the Aut-canonical form under rotations and, on (a,a,b) shapes, the twist.
  std::set<GeneratingTriple> seen{aut_canonical(auts, full.triple)};
  std::vector<GeneratingTriple> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    std::vector<GeneratingTriple> next{aut_canonical(auts, rotate(x, 1))};
    if (x.sig.is_aab()) next.push_back(aut_canonical(auts, twist_action(g, x)));
    for (auto& y : next)
      if (seen.insert(y).second) todo.push_back(y);
  }
  return DedupeKey{genus, g.order(), g.family().tag(), *seen.begin()};
}

}  // namespace trisurf

#include "trisurf/ske.hpp"

#include <algorithm>

#include <omp.h>

namespace trisurf {

namespace {

bool orders_match(const FiniteGroup& g, Elem x, Elem y, Elem z, const TriangleSignature& sig) {
  return g.element_order(x) == sig[0] && g.element_order(y) == sig[1] && g.element_order(z) == sig[2];
}

std::vector<Elem> elements_of_order(const FiniteGroup& g, int m) {
  std::vector<Elem> v;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == m) v.push_back(x);
  return v;
}

void triples_for_first(const FiniteGroup& g, const TriangleSignature& sig, Elem g1,
                       const std::vector<Elem>& seconds, std::vector<GeneratingTriple>& out) {
  for (Elem g2 : seconds) {
    Elem g3 = g.inv(g.mul(g1, g2));
    if (g.element_order(g3) != sig[2]) continue;
    if (generated_order(g, g1, g2) != g.order()) continue;
    out.push_back(GeneratingTriple{{g1, g2, g3}, sig});
  }
}

}  // namespace

bool is_generating_triple(const FiniteGroup& g, const GeneratingTriple& t) {
  return g.mul(g.mul(t[0], t[1]), t[2]) == g.identity() && orders_match(g, t[0], t[1], t[2], t.sig) &&
         generated_order(g, t[0], t[1]) == g.order();
}

std::vector<GeneratingTriple> enumerate_triples_serial(const FiniteGroup& g, const TriangleSignature& sig) {
  std::vector<GeneratingTriple> out;
  const auto firsts = elements_of_order(g, sig[0]);
  const auto seconds = elements_of_order(g, sig[1]);
  for (Elem g1 : firsts) triples_for_first(g, sig, g1, seconds, out);
  return out;
}

std::vector<GeneratingTriple> enumerate_triples(const FiniteGroup& g, const TriangleSignature& sig, int jobs) {
  const auto firsts = elements_of_order(g, sig[0]);
  const auto seconds = elements_of_order(g, sig[1]);
  std::vector<std::vector<GeneratingTriple>> buckets(firsts.size());
  const int n = static_cast<int>(firsts.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) triples_for_first(g, sig, firsts[i], seconds, buckets[i]);
  std::vector<GeneratingTriple> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool has_generating_triple(const FiniteGroup& g, const TriangleSignature& sig) {
  const auto seconds = elements_of_order(g, sig[1]);
  for (Elem g1 : elements_of_order(g, sig[0]))
    for (Elem g2 : seconds) {
      Elem g3 = g.inv(g.mul(g1, g2));
      if (g.element_order(g3) == sig[2] && generated_order(g, g1, g2) == g.order()) return true;
    }
  return false;
}

GeneratingTriple apply(const Automorphism& a, const GeneratingTriple& t) {
  return GeneratingTriple{{a(t[0]), a(t[1]), a(t[2])}, t.sig};
}

GeneratingTriple aut_canonical(const std::vector<Automorphism>& auts, const GeneratingTriple& t) {
  GeneratingTriple best = t;
  for (const auto& a : auts) best = std::min(best, apply(a, t));
  return best;
}

std::vector<SkeClass> aut_classes(const FiniteGroup& g, const std::vector<GeneratingTriple>& triples,
                                  const std::vector<Automorphism>& auts) {
  std::vector<GeneratingTriple> sorted = triples;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = g.order();
  std::vector<char> seen(n * n, 0);
  std::vector<SkeClass> out;
  for (const auto& t : sorted) {
    if (seen[t[0] * n + t[1]]) continue;
    // t is the least unseen triple, hence the minimum of its orbit.
    SkeClass c{t, 0, riemann_hurwitz_genus(g.order(), t.sig)};
    for (const auto& a : auts) {
      auto& mark = seen[a(t[0]) * n + a(t[1])];
      if (!mark) {
        mark = 1;
        ++c.orbit_size;
      }
    }
    out.push_back(c);
  }
  return out;
}

std::vector<SkeClass> aut_classes(const FiniteGroup& g, const std::vector<GeneratingTriple>& triples) {
  if (triples.empty()) return {};
  return aut_classes(g, triples, automorphism_group(g));
}

bool is_reflexive(const FiniteGroup& g, const GeneratingTriple& t, const std::vector<Automorphism>& auts) {
  return std::any_of(auts.begin(), auts.end(),
                     [&](const Automorphism& a) { return a(t[0]) == g.inv(t[0]) && a(t[1]) == g.inv(t[1]); });
}

bool is_reflexive(const FiniteGroup& g, const GeneratingTriple& t) {
  return is_reflexive(g, t, automorphism_group(g));
}

std::array<ConePointFixedData, 3> fixed_coset_data(const FiniteGroup& g, const GeneratingTriple& t, Elem h) {
  std::array<ConePointFixedData, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Elem gi = t[i];
    const int m = g.element_order(gi);
    std::vector<Elem> powers(m);  // powers[k] = gi^k
    std::vector<int> log(g.order(), -1);
    Elem y = g.identity();
    for (int k = 0; k < m; ++k) {
      powers[k] = y;
      log[y] = k;
      y = g.mul(y, gi);
    }
    out[i].period = m;
    std::vector<char> visited(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
      if (visited[x]) continue;
      for (Elem s : powers) visited[g.mul(x, s)] = 1;
      int k = log[g.mul(g.mul(g.inv(x), h), x)];
      if (k < 0) continue;
      ++out[i].fixed_count;
      out[i].exponents.push_back(k);
    }
    std::sort(out[i].exponents.begin(), out[i].exponents.end());
  }
  return out;
}

}  // namespace trisurf

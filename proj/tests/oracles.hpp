#pragma once

// Brute-force reference computations used as test oracles. They only read the
// multiplication table and share no search code with the library.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "trisurf/group.hpp"

namespace oracle {

using trisurf::Elem;
using trisurf::FiniteGroup;

inline int order_of(const FiniteGroup& g, Elem x) {
  int k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return x == 0 ? 1 : k;
}

inline std::set<Elem> closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> s{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : gens)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

inline Elem inverse(const FiniteGroup& g, Elem x) {
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == 0) return y;
  return -1;
}

/// All (g1, g2, g3) with g1 g2 g3 = 1, orders (a, b, c) and <g1, g2> = G.
inline std::vector<std::array<Elem, 3>> triples(const FiniteGroup& g, int a, int b, int c) {
  std::vector<std::array<Elem, 3>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (order_of(g, x) != a) continue;
    for (Elem y = 0; y < g.order(); ++y) {
      if (order_of(g, y) != b) continue;
      Elem z = inverse(g, g.mul(x, y));
      if (order_of(g, z) != c) continue;
      if (static_cast<int>(closure(g, {x, y}).size()) == g.order()) out.push_back({x, y, z});
    }
  }
  return out;
}

/// Whether g1 -> h1, g2 -> h2 extends to an automorphism, via words in (g1, g2).
inline bool equivalent(const FiniteGroup& g, std::array<Elem, 3> s, std::array<Elem, 3> t) {
  std::vector<Elem> map(g.order(), -1);
  map[0] = 0;
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (int i = 0; i < 2; ++i) {
        Elem y = g.mul(x, s[i]);
        if (map[y] < 0) {
          map[y] = g.mul(map[x], t[i]);
          next.push_back(y);
        }
      }
    frontier = next;
  }
  if (map[s[0]] != t[0] || map[s[1]] != t[1]) return false;
  std::set<Elem> image(map.begin(), map.end());
  if (static_cast<int>(image.size()) != g.order() || image.count(-1)) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (map[g.mul(x, y)] != g.mul(map[x], map[y])) return false;
  return true;
}

/// Fixed points of h on cone point i: |C(h)| |h^G ∩ <g_i>| / m_i.
inline int fixed_points(const FiniteGroup& g, Elem gi, Elem h) {
  int centralizer = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.mul(x, h) == g.mul(h, x)) ++centralizer;
  auto cyc = closure(g, {gi});
  std::set<Elem> cls;
  for (Elem x = 0; x < g.order(); ++x) cls.insert(g.mul(g.mul(x, h), inverse(g, x)));
  int meet = 0;
  for (Elem y : cls) meet += static_cast<int>(cyc.count(y));
  return centralizer * meet / static_cast<int>(cyc.size());
}

}  // namespace oracle

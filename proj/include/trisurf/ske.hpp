#pragma once

#include <array>
#include <compare>
#include <vector>

#include "trisurf/group.hpp"
#include "trisurf/signature.hpp"

namespace trisurf {

/// (g1, g2, g3) with g1 g2 g3 = 1, element orders given by `sig` (display
/// order) and <g1, g2> the whole group.
struct GeneratingTriple {
  std::array<Elem, 3> elems{};
  TriangleSignature sig;

  Elem operator[](int i) const { return elems[i]; }
  auto operator<=>(const GeneratingTriple&) const = default;
};

/// An Aut(G)-orbit of generating triples.
struct SkeClass {
  GeneratingTriple rep;  // lexicographically minimal member of the orbit
  int orbit_size = 0;
  long long genus = 0;

  auto operator<=>(const SkeClass&) const = default;
};

bool is_generating_triple(const FiniteGroup& g, const GeneratingTriple& t);

/// All generating triples for `sig` in display order, sorted by (g1, g2).
/// Uses OpenMP over g1; `jobs` <= 0 keeps the runtime default.
std::vector<GeneratingTriple> enumerate_triples(const FiniteGroup& g, const TriangleSignature& sig, int jobs = 0);

/// Single-threaded reference implementation of enumerate_triples.
std::vector<GeneratingTriple> enumerate_triples_serial(const FiniteGroup& g, const TriangleSignature& sig);

/// True when at least one generating triple exists (periods in any order).
bool has_generating_triple(const FiniteGroup& g, const TriangleSignature& sig);

/// Componentwise image α(t).
GeneratingTriple apply(const Automorphism& a, const GeneratingTriple& t);

/// Lexicographic minimum of the Aut(G)-orbit of t.
GeneratingTriple aut_canonical(const std::vector<Automorphism>& auts, const GeneratingTriple& t);

/// Aut(G)-orbits of `triples`, ordered by canonical representative.
std::vector<SkeClass> aut_classes(const FiniteGroup& g, const std::vector<GeneratingTriple>& triples,
                                  const std::vector<Automorphism>& auts);
std::vector<SkeClass> aut_classes(const FiniteGroup& g, const std::vector<GeneratingTriple>& triples);

/// Some α in Aut(G) inverts both g1 and g2.
bool is_reflexive(const FiniteGroup& g, const GeneratingTriple& t, const std::vector<Automorphism>& auts);
bool is_reflexive(const FiniteGroup& g, const GeneratingTriple& t);

struct ConePointFixedData {
  int period = 0;
  int fixed_count = 0;
  /// For each fixed coset x<g_i>, the k with x^-1 h x = g_i^k (rotation ω_{m_i}^k). Sorted.
  std::vector<int> exponents;
};

/// Fixed points of h on the surface, grouped by cone point.
std::array<ConePointFixedData, 3> fixed_coset_data(const FiniteGroup& g, const GeneratingTriple& t, Elem h);

}  // namespace trisurf

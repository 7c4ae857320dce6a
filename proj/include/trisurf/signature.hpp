#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "trisurf/group.hpp"

namespace trisurf {

using Rational = boost::rational<long long>;

/// Periods (m1, m2, m3) of a triangular signature (0; m1, m2, m3), kept in the
/// order they were given. Use normalized() for the ascending storage form.
struct TriangleSignature {
  std::array<int, 3> periods{};

  int operator[](int i) const { return periods[i]; }
  TriangleSignature normalized() const;
  /// (a, a, b) with the repeated period first.
  bool is_aab() const { return periods[0] == periods[1]; }
  bool is_hyperbolic() const;
  /// "(m1,m2,m3)"
  std::string str() const;
  /// Periods written in terms of p, e.g. "(2p,2p,p)".
  std::string symbolic(int p) const;

  auto operator<=>(const TriangleSignature&) const = default;
};

/// Raised when Riemann–Hurwitz gives a non-integral genus.
class IncompatibleSignature : public Error {
 public:
  using Error::Error;
};

/// Raised when Riemann–Hurwitz gives an integral genus below 2.
class BelowGenusBound : public Error {
 public:
  BelowGenusBound(const std::string& what, long long genus) : Error(what), genus(genus) {}
  long long genus;
};

/// Genus g from 2g-2 = |G|(2h-2 + sum(1 - 1/m_i)) in exact arithmetic.
/// Throws IncompatibleSignature or BelowGenusBound.
long long riemann_hurwitz_genus(long long group_order, int orbit_genus, std::span<const int> periods);
long long riemann_hurwitz_genus(long long group_order, const TriangleSignature& sig);

/// Normalized hyperbolic area -2 + sum(1 - 1/m_i) of a triangular signature.
Rational hyperbolic_area(const TriangleSignature& sig);

/// All ascending triangular signatures drawn from the element orders of g that
/// give genus >= 2 and carry at least one generating triple. Sorted.
std::vector<TriangleSignature> admissible_triangular_signatures(const FiniteGroup& g);

/// Period m written in terms of p: "p", "2p", "p²", "2p²", "4", ...
std::string symbolic_period(int m, int p);

}  // namespace trisurf

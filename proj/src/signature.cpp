#include "trisurf/signature.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "trisurf/ske.hpp"

namespace trisurf {

TriangleSignature TriangleSignature::normalized() const {
  TriangleSignature s = *this;
  std::sort(s.periods.begin(), s.periods.end());
  return s;
}

bool TriangleSignature::is_hyperbolic() const { return hyperbolic_area(*this) > 0; }

std::string TriangleSignature::str() const {
  return fmt::format("({},{},{})", periods[0], periods[1], periods[2]);
}

std::string TriangleSignature::symbolic(int p) const {
  return fmt::format("({},{},{})", symbolic_period(periods[0], p), symbolic_period(periods[1], p),
                     symbolic_period(periods[2], p));
}

std::string symbolic_period(int m, int p) {
  if (m == p * p) return "p²";
  if (m == 2 * p * p) return "2p²";
  if (m == p) return "p";
  if (m % p == 0 && m / p < p) return fmt::format("{}p", m / p);
  return std::to_string(m);
}

Rational hyperbolic_area(const TriangleSignature& sig) {
  Rational a(-2);
  for (int m : sig.periods) a += Rational(1) - Rational(1, m);
  return a;
}

long long riemann_hurwitz_genus(long long group_order, int orbit_genus, std::span<const int> periods) {
  if (group_order < 1) throw Error("group order must be positive");
  Rational s(2LL * orbit_genus - 2);
  for (int m : periods) {
    if (m < 2) throw Error(fmt::format("period {} is below 2", m));
    s += Rational(1) - Rational(1, m);
  }
  Rational g = (Rational(group_order) * s + 2) / 2;
  if (g.denominator() != 1)
    throw IncompatibleSignature(fmt::format("incompatible signature: genus {}/{} is not an integer",
                                            g.numerator(), g.denominator()));
  if (g.numerator() < 2)
    throw BelowGenusBound(fmt::format("below genus bound: genus {} < 2", g.numerator()), g.numerator());
  return g.numerator();
}

long long riemann_hurwitz_genus(long long group_order, const TriangleSignature& sig) {
  return riemann_hurwitz_genus(group_order, 0, sig.periods);
}

std::vector<TriangleSignature> admissible_triangular_signatures(const FiniteGroup& g) {
  std::vector<int> spec = g.order_spectrum();
  spec.erase(std::remove(spec.begin(), spec.end(), 1), spec.end());
  std::vector<TriangleSignature> out;
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = i; j < spec.size(); ++j)
      for (std::size_t k = j; k < spec.size(); ++k) {
        TriangleSignature sig{{spec[i], spec[j], spec[k]}};
        try {
          riemann_hurwitz_genus(g.order(), sig);
        } catch (const Error&) {
          continue;
        }
        if (has_generating_triple(g, sig)) out.push_back(sig);
      }
  return out;
}

}  // namespace trisurf

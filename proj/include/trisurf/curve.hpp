#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisurf/group.hpp"
#include "trisurf/ske.hpp"

namespace trisurf {

/// A factor of y^n = Π factor^e: x (a single branch value at 0), or x^d ∓ 1
/// (the d-th roots of ±1).
struct CoverFactor {
  enum class Kind { Monomial, MinusOne, PlusOne };
  Kind kind = Kind::Monomial;
  int degree = 1;  // number of branch values
  int exponent = 1;

  auto operator<=>(const CoverFactor&) const = default;
};

/// y^n = Π factor^e, with the branch datum at infinity stored separately.
struct CyclicCoverModel {
  int n = 2;
  std::vector<CoverFactor> factors;
  int infinity_exponent = 0;  // 0: unramified at infinity
  std::map<std::string, int> params;

  /// One exponent per branch value, infinity included when ramified.
  std::vector<int> branch_exponents() const;
  /// Checks the cover conditions; returns a description of the first failure.
  std::optional<std::string> violation() const;
  /// Canonical equation string, e.g. "y^5 = (x^5 - 1)^2 * (x^5 + 1)^3".
  std::string render() const;

  bool operator==(const CyclicCoverModel&) const = default;
};

/// g = ½(2 + (r-2)n - Σ gcd(n_i, n)). Throws Error naming the violated condition.
long long ngonal_genus(int n, const std::vector<int>& exponents);
long long ngonal_genus(const CyclicCoverModel& m);

/// The seven classified (group, signature) cells. Names follow the group and
/// the shape of the signature: Z2pxZp on (2p,2p,p); DpxZp on (2,p,2p) and
/// (2p,2p,p); Z2p2 on (2,p²,2p²), (2p²,2p²,p), (2p,p²,2p²) and (2p²,2p²,p²).
enum class ActionCase {
  AbelianPair,
  DihedralMixed,
  DihedralEqual,
  CyclicInvolution,
  CyclicOrderP,
  CyclicMixed,
  CyclicEqual,
};

std::string to_string(ActionCase c);
std::optional<ActionCase> parse_action_case(std::string_view s);

/// Closed-form model of an action case. `param` is j (DihedralEqual),
/// m (CyclicOrderP), k (CyclicMixed) or l (CyclicEqual); ignored otherwise. Throws Error when out of range.
CyclicCoverModel closed_form_model(ActionCase c, int p, int param = 0);

/// Smallest ε with 1 <= εp - 2(j+1) < p.
int epsilon_j(int p, int j);

/// Genus of the quotient of the surface by <h>, from fixed-point data.
long long quotient_genus(const FiniteGroup& g, const GeneratingTriple& t, Elem h);

/// Cover model of the surface over its quotient by <h>, with exponents read off
/// from rotation numbers. Throws Error("not n-gonal via this subgroup") unless
/// the quotient has genus 0.
CyclicCoverModel derive_model(const FiniteGroup& g, const GeneratingTriple& t, Elem h);

/// Same gonality and some unit u mod n maps the (group size, exponent) data of
/// a onto that of b.
bool models_equivalent(const CyclicCoverModel& a, const CyclicCoverModel& b);

/// Cyclic subgroups of order n in g, each given by its least generator, whose
/// quotient of the surface has genus 0.
std::vector<Elem> gonal_subgroups(const FiniteGroup& g, const GeneratingTriple& t, int n, bool normal_only);

/// Generator of the gonal subgroup used for the model: a normal cyclic
/// subgroup of order p (else p²) with genus-0 quotient, least generator first.
std::optional<Elem> model_subgroup(const FiniteGroup& g, const GeneratingTriple& t, int p);

/// Some involution has quotient genus 0.
bool is_hyperelliptic(const FiniteGroup& g, const GeneratingTriple& t);

}  // namespace trisurf

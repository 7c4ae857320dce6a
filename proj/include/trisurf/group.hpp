#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trisurf {

/// Index of an element inside a FiniteGroup table. The identity is always 0.
using Elem = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive search would exceed the configured group-size bound.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// Raised when a computation contradicts an invariant the classification relies on.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

enum class FamilyKind {
  Cyclic,
  Dihedral,
  DirectProduct,
  Z2pxZp,
  DpxZp,
  Zp2SemiZ2,
  Z2p2,
  Zp2SemiD3,
  DpxDp,
  DpxZ2p,
  Dp2SemiZ2,
  Zp2SemiD4,
};

/// Constructor descriptor for a group: a catalog family with its prime, or one
/// of the generic constructors (cyclic, dihedral, direct product).
struct Family {
  FamilyKind kind = FamilyKind::Cyclic;
  int p = 0;  // prime parameter of catalog families
  int n = 0;  // size parameter of Cyclic(n) / Dihedral(n)
  std::vector<Family> factors;

  static Family cyclic(int n);
  static Family dihedral(int n);
  static Family direct(Family lhs, Family rhs);
  static Family catalog(FamilyKind kind, int p);

  /// Declared order of the group this descriptor builds.
  int declared_order() const;
  /// Short identifier without parameters, e.g. "DpxZp" or "Cyclic(18)".
  std::string name() const;
  /// Identifier including the prime, e.g. "DpxZp(p=5)". Used as an isomorphism-class id.
  std::string tag() const;
  /// Symbolic name in the notation of the classification table, e.g. "𝔻ₚ×ℤₚ".
  std::string pretty() const;

  bool operator==(const Family&) const = default;
};

/// Parses a family name as printed by Family::name() ("DpxZp", "Z2p2", "Dp2", ...).
/// The dihedral group of order 2p² is accepted as "Dp2".
Family parse_family(std::string_view name, int p);

/// A concrete finite group stored as a full multiplication table.
///
/// Elements are indexed lexicographically in the structural tuple representation
/// of the constructor, so every "first found" rule downstream is deterministic.
class FiniteGroup {
 public:
  FiniteGroup(Family family, int order, std::vector<Elem> table,
              std::vector<std::pair<std::string, Elem>> generators);

  int order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem x, Elem y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  Elem inv(Elem x) const { return inverse_[x]; }
  Elem pow(Elem x, long long k) const;
  /// x·y·x⁻¹
  Elem conj(Elem x, Elem y) const { return mul(mul(x, y), inverse_[x]); }

  int element_order(Elem x) const { return orders_[x]; }
  int class_size(Elem x) const { return class_sizes_[x]; }
  bool is_abelian() const;

  const Family& family() const { return family_; }
  std::span<const Elem> table() const { return table_; }
  const std::vector<std::pair<std::string, Elem>>& generators() const { return generators_; }
  Elem generator(std::string_view name) const;

  /// Evaluates a word in the named generators, e.g. "c a^-1 b^-2" or "(BA)^-1".
  Elem eval(std::string_view word) const;

  /// Shortest word in the named generators (ties broken by generator order).
  std::string label(Elem x) const;

  /// Exhaustive check of associativity, identity and inverses.
  bool verify_axioms() const;

  /// Sorted list of distinct element orders (including 1).
  std::vector<int> order_spectrum() const;

 private:
  Family family_;
  int order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
  std::vector<int> class_sizes_;
  std::vector<std::pair<std::string, Elem>> generators_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Automorphism {
  std::vector<Elem> perm;

  Elem operator()(Elem x) const { return perm[x]; }
  auto operator<=>(const Automorphism&) const = default;
};

/// Builds a group from its family descriptor. Throws Error for p = 2, non-prime p,
/// or parameters under which the presentation collapses.
GroupPtr build_group(const Family& family);
GroupPtr build_group(FamilyKind kind, int p);

bool is_prime(int n);

int element_order(const FiniteGroup& g, Elem x);

/// Closure of gens under the group operation; sorted element indices.
std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);

/// Order of ⟨x, y⟩, stopping early once it reaches |G|.
int generated_order(const FiniteGroup& g, Elem x, Elem y);

/// A short generating set, preferring two generators when one exists.
std::vector<Elem> small_generating_set(const FiniteGroup& g);

inline constexpr int kDefaultSearchBound = 1000;

/// Every automorphism of g, sorted lexicographically by permutation.
std::vector<Automorphism> automorphism_group(const FiniteGroup& g, int bound = kDefaultSearchBound);

/// A product-preserving bijection g → h, or nullopt. The first one found in
/// lexicographic search order is returned.
std::optional<Automorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                             int bound = kDefaultSearchBound);

/// Tries to extend gens[i] ↦ imgs[i] to an injective homomorphism from ⟨gens⟩ ⊆ src into dst.
/// On success the map is written to `out` (entries outside ⟨gens⟩ are -1).
bool extend_monomorphism(const FiniteGroup& src, const FiniteGroup& dst, std::span<const Elem> gens,
                         std::span<const Elem> imgs, std::vector<Elem>& out);

/// The subgroup `elems` (closed, containing the identity) of g as a standalone group.
/// Element i of the result corresponds to elems[i]; elems must be sorted.
GroupPtr subgroup_as_group(const FiniteGroup& g, std::span<const Elem> elems);

}  // namespace trisurf

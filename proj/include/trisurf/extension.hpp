#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trisurf/catalog.hpp"
#include "trisurf/group.hpp"
#include "trisurf/ske.hpp"

namespace trisurf {

/// One triangle-group inclusion Δ(source) ≤ Δ(target) of finite index, with the
/// canonical generators of the source written as words in y1, y2, y3.
struct InclusionRow {
  TriangleSignature source;
  TriangleSignature target;
  int index = 0;
  bool normal = false;
  std::array<std::string, 3> words;
  std::string label;

  /// (a,a,b) ⊴₂ (2,a,2b): x = (y2, y3 y2 y3⁻¹, y3²).
  static InclusionRow normal_aab(int a, int b);
  /// (2,n,2n) ≤₃ (2,3,2n): x = (y2 y1 y2⁻¹, y2⁻¹ y3² y2, y3).
  static InclusionRow nonnormal_2n2n(int n);

  /// Index equals the ratio of hyperbolic areas.
  bool index_consistent() const;

  /// Evaluates the word map on a triple of the target group.
  std::array<Elem, 3> restrict(const FiniteGroup& target_group, const GeneratingTriple& target_triple) const;
};

/// Rows whose source is exactly `sig` (display order).
std::vector<InclusionRow> rows_from(const TriangleSignature& sig);

/// (g1,g2,g3) -> (g2,g3,g1), applied k times; the signature rotates with it.
GeneratingTriple rotate(const GeneratingTriple& t, int k);

/// σ(g1,g2,g3) = (g2, g3 g1 g3⁻¹, g3) for (a,a,b)-shaped triples.
GeneratingTriple twist_action(const FiniteGroup& g, const GeneratingTriple& t);

/// Minimum of the <Aut(G), σ>-orbit (σ only for (a,a,b) shapes).
GeneratingTriple surface_canonical(const FiniteGroup& g, const std::vector<Automorphism>& auts,
                                   const GeneratingTriple& t);

/// One isomorphism class of surfaces with a G-action: a union of Aut(G)-classes.
struct SurfaceOrbit {
  GeneratingTriple rep;           // minimal triple over the union
  std::vector<SkeClass> members;  // Aut-classes merged by the twist, ordered
  long long genus = 0;
};

std::vector<SurfaceOrbit> surface_classes(const FiniteGroup& g, const TriangleSignature& sig,
                                          const std::vector<GeneratingTriple>& triples,
                                          const std::vector<Automorphism>& auts);
std::vector<SurfaceOrbit> surface_classes(Catalog& cat, const FiniteGroup& g, const TriangleSignature& sig);

/// Lex-minimal ske of `over` on row.target whose restriction along the row is
/// carried onto t by an isomorphism onto g. t must be in row.source order.
std::optional<GeneratingTriple> extend_action(Catalog& cat, const FiniteGroup& g, const GeneratingTriple& t,
                                              const InclusionRow& row, const FiniteGroup& over);

struct ExtensionStep {
  GroupPtr group;
  GeneratingTriple triple;  // in row.target order
  InclusionRow row;
  int rotation = 0;  // rotation applied to the previous triple before the row
};

struct FullAction {
  GroupPtr group;
  GeneratingTriple triple;
  std::vector<ExtensionStep> chain;
};

/// Follows inclusion rows through the overgroup catalog until no extension
/// exists. Throws ContradictionError if non-isomorphic overgroups both extend.
FullAction full_action(Catalog& cat, GroupPtr g, const GeneratingTriple& t);

/// Some involutory α in Aut(G) has α(g1) = g2.
bool bcc_n8_check(const FiniteGroup& g, const GeneratingTriple& t, const std::vector<Automorphism>& auts);

/// Some α in Aut(G) has α(t) = σ(t): the normalizer twist is realized inside G.
bool twist_realized(const FiniteGroup& g, const GeneratingTriple& t, const std::vector<Automorphism>& auts);

/// Canonical identity of a surface: genus, full group and its canonical ske.
/// The triple is the minimum over the orbit generated by Aut, rotations and the twist.
struct DedupeKey {
  long long genus = 0;
  int full_order = 0;
  std::string full_family;
  GeneratingTriple full_triple;

  auto operator<=>(const DedupeKey&) const = default;
};

DedupeKey dedupe_key(Catalog& cat, const FullAction& full, long long genus);

}  // namespace trisurf

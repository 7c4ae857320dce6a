#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisurf/catalog.hpp"
#include "trisurf/curve.hpp"
#include "trisurf/extension.hpp"

namespace trisurf {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kMaxDefaultPrime = 7;

/// Action case of a (base family, display signature) cell, if it is one of the classified cells.
std::optional<ActionCase> action_case_for(const Family& family, const TriangleSignature& display, int p);

/// Display order used for a base signature: (a,a,b) when two periods agree, else ascending.
TriangleSignature display_order(const TriangleSignature& sig);

/// Rearranges a full-group signature into the form the classification table prints.
TriangleSignature table_display(const TriangleSignature& sig, int p);

/// Closed-form genus of an action case.
long long closed_form_genus(ActionCase c, int p);

/// Parameter values of an action case: j, m, n, l ranges; {0} for single-class cases.
std::vector<int> case_params(ActionCase c, int p);

/// The explicit ske of an action case in the base group, e.g. (cb, ca⁻¹b^{-1-j}, ab^j).
GeneratingTriple explicit_triple(ActionCase c, const FiniteGroup& g, int param);

/// Parameter of the curve family attached to an ske parameter (k = 2n mod p for the cyclic-mixed case).
int model_param(ActionCase c, int p, int param);

struct ModelRecord {
  int gonality = 0;
  CyclicCoverModel derived;
  std::optional<CyclicCoverModel> closed_form;
  bool matches_closed_form = false;
  std::string equation;

  bool operator==(const ModelRecord&) const = default;
};

struct SurfaceRecord {
  int id = 0;
  std::string group;  // family name of the acting group, e.g. "DpxZp"
  TriangleSignature signature;
  std::string case_name;
  std::vector<int> params;  // case parameters of the merged Aut-classes
  std::array<std::string, 3> triple;
  long long genus = 0;
  long long closed_form_genus = 0;
  std::string full_group;
  int full_order = 0;
  TriangleSignature full_signature;
  std::array<std::string, 3> full_triple;
  std::vector<std::string> extension_chain;
  std::string dedupe_key;
  ModelRecord model;
  int pgonal_subgroups = 0;
  bool hyperelliptic = false;
  /// Other (group, signature) actions found on the same surface.
  std::vector<std::string> also_supported_by;

  bool operator==(const SurfaceRecord&) const = default;
};

struct CensusRow {
  std::string group;
  TriangleSignature signature;
  int count = 0;
  std::string full_group;
  int full_order = 0;
  TriangleSignature full_signature;
  long long genus = 0;
  std::vector<int> surfaces;

  bool operator==(const CensusRow&) const = default;
};

struct HypermapClass {
  std::array<std::string, 3> triple;
  bool reflexive = false;
  int surface = 0;

  bool operator==(const HypermapClass&) const = default;
};

struct HypermapEntry {
  std::string group;
  TriangleSignature type;
  int count = 0;
  bool is_map = false;  // one period equals 2
  std::vector<HypermapClass> classes;

  bool operator==(const HypermapEntry&) const = default;
};

struct HypermapReport {
  int prime = 0;
  std::vector<HypermapEntry> entries;
  int total = 0;

  bool operator==(const HypermapReport&) const = default;
};

struct CensusReport {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::optional<std::string> generated_at;
  int prime = 0;
  std::vector<CensusRow> rows;
  std::vector<SurfaceRecord> surfaces;
  std::vector<HypermapEntry> hypermaps;
  int total_surfaces = 0;
  int total_hypermaps = 0;
  std::map<std::string, long long> strong_symmetric_genus;

  bool operator==(const CensusReport&) const = default;
};

struct ClassifyOptions {
  int jobs = 0;
  bool allow_large_prime = false;
};

/// Full pipeline for one prime. Throws Error for unsupported primes and
/// ContradictionError when an invariant of the classification fails.
CensusReport classify(int p, const ClassifyOptions& opts = {});
HypermapReport hypermap_census(int p, const ClassifyOptions& opts = {});
HypermapReport hypermap_report(const CensusReport& report);

enum class Format { Json, Markdown };
std::optional<Format> parse_format(std::string_view s);

std::string render(const CensusReport& report, Format format);
std::string render(const HypermapReport& report, Format format);
CensusReport census_from_json(std::string_view text);

/// Checks the report against the classification's closed forms (totals, row
/// counts, full-group orders, row genera, the shared surface, models, strong
/// symmetric genus). Empty when everything holds.
std::vector<std::string> invariant_violations(const CensusReport& report);

}  // namespace trisurf

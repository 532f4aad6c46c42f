#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specpos/analysis.hpp"
#include "specpos/poset.hpp"

namespace specpos {

// Exhaustive enumeration is meant for small point counts; the default cap
// keeps runs interactive (2045 isomorphism classes at n = 7). It can be
// raised to the hard cap, at a cost of roughly a minute of enumeration
// (2.8 million labeled generations at n = 8).
inline constexpr int kDefaultCensusCap = 7;
inline constexpr int kHardCensusCap = 8;

// One census row: how many isomorphism classes of n-point posets share a
// classification outcome. The property vector lists the AnalysisReport
// booleans in the order given by census_property_names().
struct CensusRow {
  int n_points = 0;
  std::vector<bool> property_vector;
  long count = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

std::vector<std::string> census_property_names();
std::vector<bool> report_property_vector(const AnalysisReport& r);

// All posets with exactly n points, without infinite flags. With up_to_iso
// each isomorphism class appears exactly once, as its canonical
// representative on points p0..p{n-1}; otherwise every labeled order on
// p0..p{n-1} appears. Deterministic order (first encounter during
// generation). Throws CapExceededError when n exceeds the cap or the cap
// exceeds the hard cap, ValidationError when n < 1.
std::vector<SpectralPoset> enumerate_posets(int n, bool up_to_iso = true,
                                            int cap = kDefaultCensusCap);

// Classification census over the isomorphism classes of n-point posets;
// rows are sorted by property vector and their counts sum to the number of
// classes. jobs > 1 parallelizes classification; the result is identical
// for every jobs value.
std::vector<CensusRow> census(int n, int cap = kDefaultCensusCap,
                              int jobs = 1);

struct ImplicationCheck {
  std::string name;
  bool passed = true;
  // First violating poset in enumeration order, when the check failed.
  std::optional<SpectralPoset> counterexample;
};

struct ImplicationReport {
  int n_points = 0;
  bool all_passed = false;
  std::vector<ImplicationCheck> checks;
};

// Machine-checks, on every isomorphism class of n-point posets, the chain
// statements the analysis relies on (implications between the
// classification properties and the codimension-function criteria).
ImplicationReport verify_implications(int n, int cap = kDefaultCensusCap,
                                      int jobs = 1);

// Properties a census search can constrain.
enum class Property {
  equidimensional,
  equicodimensional,
  catenary,
  weakly_biequidimensional,
  biequidimensional,
  dimension_formula,
  dim_additivity,
  codim_additivity,
  local_rings_catenary_equidimensional,
  codim_function_exists,
  noetherian_obstruction_free,
};

const std::vector<Property>& all_properties();
std::string property_name(Property p);
std::optional<Property> property_from_string(const std::string& name);
bool evaluate_property(const SpectralPoset& poset, Property p);

struct MinimalSearchResult {
  int n_points;
  SpectralPoset witness;  // first witness in enumeration order at that size
};

// Smallest n <= cap admitting a poset where every require_true property
// holds and every require_false property fails; nullopt when none exists.
std::optional<MinimalSearchResult> find_minimal(
    const std::vector<Property>& require_true,
    const std::vector<Property>& require_false, int cap = kDefaultCensusCap,
    int jobs = 1);

// Canonical representative of the isomorphism class (points renamed
// p0..p{n-1}); equal posets are isomorphic inputs and vice versa. Infinite
// flags are ignored. Intended for small posets (backtracks over symmetric
// labelings); throws CapExceededError beyond 12 points.
SpectralPoset canonical_form(const SpectralPoset& p);

bool isomorphic(const SpectralPoset& a, const SpectralPoset& b);

}  // namespace specpos

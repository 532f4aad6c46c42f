#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specpos/analysis.hpp"
#include "specpos/poset.hpp"

namespace specpos {

// Frozen expectations for a catalog fixture. Booleans mirror
// AnalysisReport; codim_function_exists tracks the solver outcome and
// noetherian_obstruction_free is true when no obstruction pair remains.
struct CatalogExpectation {
  int dimension = 0;
  bool equidimensional = false;
  bool equicodimensional = false;
  bool catenary = false;
  bool weakly_biequidimensional = false;
  bool biequidimensional = false;
  bool dimension_formula = false;
  bool dim_additivity = false;
  bool codim_additivity = false;
  bool local_rings_catenary_equidimensional = false;
  bool noetherian_obstruction_free = false;
  bool codim_function_exists = false;
};

struct CatalogEntry {
  std::string name;
  SpectralPoset poset;
  CatalogExpectation expected;
  // Where the example comes from, as a self-contained mathematical
  // description (the ring or construction it models).
  std::string provenance;
};

// Fixed fixtures: BUTTERFLY, NOETHERIAN_BUTTERFLY, GLUE, GLUE2, WX.
// Parametric families: CHAIN_<k> (a chain of dimension k, k >= 0) and
// ANTICHAIN_<k> (k isolated points, k >= 1).
// Throws UnknownNameError for anything else.
CatalogEntry catalog_get(const std::string& name);

// The fixed fixture names plus representative parametric instances,
// in the order catalog_verify_all() checks them.
std::vector<std::string> catalog_names();

struct CatalogMismatch {
  std::string entry;
  std::string field;
  std::string expected;
  std::string actual;
};

struct CatalogVerification {
  bool ok = false;
  std::vector<CatalogMismatch> mismatches;
};

// Recomputes every catalog entry and compares against its frozen
// expectations (classification booleans, dimension, solver outcome,
// obstruction emptiness).
CatalogVerification catalog_verify_all();

}  // namespace specpos

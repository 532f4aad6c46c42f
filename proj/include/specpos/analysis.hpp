#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specpos/poset.hpp"

namespace specpos {

// A one-line counterexample for a property that failed, preformatted with
// the point names involved. Witness construction is deterministic: always
// the first counterexample in points order.
struct Witness {
  std::string property;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AnalysisReport {
  int n_points = 0;
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
  // Comparable pairs x < y with codim(x, y) >= 2 whose strict intermediates
  // contain no infinite-flagged point: each one rules out realizability as
  // the spectrum of a Noetherian ring.
  std::vector<std::pair<std::string, std::string>> noetherian_violations;
  std::vector<Witness> witnesses;

  friend bool operator==(const AnalysisReport&,
                         const AnalysisReport&) = default;
};

// All maximal elements reach the same dim_point.
bool is_equidimensional(const SpectralPoset& p);

// All minimal elements reach the same codim_in_space.
bool is_equicodimensional(const SpectralPoset& p);

// Between any two comparable points every saturated chain has the same
// length.
bool is_catenary(const SpectralPoset& p);

bool is_weakly_biequidimensional(const SpectralPoset& p);

// Every maximal chain has length dim().
bool is_biequidimensional(const SpectralPoset& p);

// dim(Z) == dim(Y) + codim(Y, Z) for every comparable pair Y <= Z.
bool dim_additivity_holds(const SpectralPoset& p);

// codim(Y, X) == codim(Y, Z) + codim(Z, X) for every comparable pair Y <= Z.
bool codim_additivity_holds(const SpectralPoset& p);

// dim(Y) + codim(Y, X) == dim(X) for every point Y.
bool dimension_formula_holds(const SpectralPoset& p);

// The up-set of x with its induced order: the combinatorial shadow of the
// local ring at x.
SpectralPoset local_poset(const SpectralPoset& p, const std::string& x);

bool local_is_catenary(const SpectralPoset& p, const std::string& x);

// codim(x, c) agrees for every component c above x.
bool local_is_equidimensional(const SpectralPoset& p, const std::string& x);

// True iff at every closed point the local poset is catenary and
// equidimensional of full dimension dim(). Equivalent to
// is_biequidimensional; classify() cross-checks the two.
bool closed_point_local_criterion(const SpectralPoset& p);

std::vector<std::pair<std::string, std::string>> noetherian_obstructions(
    const SpectralPoset& p);

// Computes everything above plus witnesses. Also re-derives
// biequidimensionality through its equivalent characterizations
// (equidimensional + dim additivity, equicodimensional + codim additivity,
// closed-point local criterion) and throws InternalInconsistencyError if
// any disagree.
AnalysisReport classify(const SpectralPoset& p);

}  // namespace specpos

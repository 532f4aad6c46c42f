#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "specpos/poset.hpp"

namespace specpos {

// A codimension function assigns an integer to every point so that each
// cover step down increases the value by exactly one: d(lower) ==
// d(upper) + 1 for every cover (lower, upper). Valid functions on a
// connected poset differ by a constant; solve anchors every weakly
// connected component at minimum value 0.
struct CodimAssignment {
  std::map<std::string, int> values;

  friend bool operator==(const CodimAssignment&,
                         const CodimAssignment&) = default;
};

// Proof that no codimension function exists: a closed walk in the
// undirected Hasse graph with nonzero signed length, where a cover
// traversed downward counts +1 and upward -1. walk is the point sequence
// with walk.front() == walk.back(); consecutive points are covers.
struct CodimCertificate {
  std::vector<std::string> walk;
  int signed_length = 0;

  friend bool operator==(const CodimCertificate&,
                         const CodimCertificate&) = default;
};

using CodimResult = std::variant<CodimAssignment, CodimCertificate>;

inline bool has_assignment(const CodimResult& r) {
  return std::holds_alternative<CodimAssignment>(r);
}

// Decides existence by propagating potentials over each component and
// returns either the anchored assignment or a certificate walk. The
// certificate is the minimal-length conflict cycle found, reported starting
// from its lexicographically least point.
CodimResult solve_codim_function(const SpectralPoset& p);

// Checks the cover condition for an explicit candidate.
// Throws MissingValueError if d lacks a value for some point.
bool is_codim_function(const SpectralPoset& p,
                       const std::map<std::string, int>& d);

// x -> codim(closure{x}, X). Valid exactly when every local poset is
// catenary and equidimensional (see
// all_local_posets_catenary_equidimensional).
std::map<std::string, int> candidate_codim(const SpectralPoset& p);

// x -> -dim(closure{x}). Valid on some spaces (every chain, for instance)
// but not in general.
std::map<std::string, int> candidate_neg_dim(const SpectralPoset& p);

// True iff every point's local poset is catenary and equidimensional;
// provably equivalent to is_codim_function(p, candidate_codim(p)).
bool all_local_posets_catenary_equidimensional(const SpectralPoset& p);

}  // namespace specpos

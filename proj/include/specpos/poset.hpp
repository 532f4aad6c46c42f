#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specpos/errors.hpp"

namespace specpos {

// A saturated ascending chain, as point names. Length counts steps, not
// elements: a single point is a chain of length 0.
struct Chain {
  std::vector<std::string> elems;

  int length() const { return static_cast<int>(elems.size()) - 1; }

  friend bool operator==(const Chain&, const Chain&) = default;
};

struct SaturatedLengths {
  int shortest = 0;
  int longest = 0;

  friend bool operator==(const SaturatedLengths&,
                         const SaturatedLengths&) = default;
};

// A finite T0 space under its specialization order: x <= y means x lies in
// the closure of {y}. Closed points are the minimal elements, generic
// points of irreducible components the maximal ones. The poset is stored
// through its Hasse diagram; the covers handed to build() must already be
// transitively reduced and acyclic, build() rejects anything else rather
// than repairing it.
//
// An "infinite" flag on a point records that the point stands for a
// countably infinite family of pairwise incomparable points, each with the
// same strict relations to the rest of the space. Flags never change any
// chain statistic; they only feed the Noetherian realizability check.
//
// Instances are immutable after build(); every accessor is const and safe
// to call from multiple threads.
class SpectralPoset {
 public:
  // points: nonempty, duplicate-free, order is preserved and is the
  //   canonical enumeration order for every set-valued result.
  // covers: pairs (lower, upper), lower covered by upper.
  // Throws ValidationError, UnknownPointError, CycleError, NotReducedError.
  static SpectralPoset build(
      std::vector<std::string> points,
      std::vector<std::pair<std::string, std::string>> covers,
      std::vector<std::string> infinite_flags = {});

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(int i) const { return points_[i]; }

  // Throws UnknownPointError.
  int index_of(const std::string& point) const;
  bool has_point(const std::string& point) const;

  // Cover pairs (lower, upper) as indices, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<std::pair<std::string, std::string>> cover_names() const;

  // Indices of the covers directly above/below i, ascending.
  const std::vector<int>& upper_covers(int i) const { return upper_[i]; }
  const std::vector<int>& lower_covers(int i) const { return lower_[i]; }

  bool is_infinite(int i) const { return infinite_[i]; }
  bool is_infinite(const std::string& point) const;
  std::vector<std::string> infinite_points() const;

  // Same space with the infinite flags replaced.
  SpectralPoset with_infinite_flags(std::vector<std::string> flags) const;

  bool leq(int x, int y) const { return leq_[x][y]; }
  bool leq(const std::string& x, const std::string& y) const;

  // {y : y <= x} resp. {y : y >= x}, in points order.
  std::vector<int> down_set(int x) const;
  std::vector<int> up_set(int x) const;
  std::vector<std::string> down_set(const std::string& x) const;
  std::vector<std::string> up_set(const std::string& x) const;

  // All maximal chains (minimal element to maximal element along covers),
  // ordered lexicographically by point indices.
  std::vector<Chain> maximal_chains() const;

  // Shortest and longest saturated chain length from x up to y.
  // Throws NotComparableError unless x <= y.
  SaturatedLengths saturated_lengths(int x, int y) const;
  SaturatedLengths saturated_lengths(const std::string& x,
                                     const std::string& y) const;

  // Deterministic representatives: among all optimal chains the one that is
  // lexicographically least by point indices.
  Chain shortest_saturated_chain(int x, int y) const;
  Chain longest_saturated_chain(int x, int y) const;

  // Length of the longest chain in the whole space.
  int dim() const { return dim_; }

  // dim of the closure of {x}: longest chain descending from x.
  int dim_point(int x) const { return dim_point_[x]; }
  int dim_point(const std::string& x) const;

  // Longest saturated chain from x up to y; codim(x, x) == 0.
  // Throws NotComparableError unless x <= y.
  int codim(int x, int y) const;
  int codim(const std::string& x, const std::string& y) const;

  // codim of the closure of {x} in the whole space: longest chain
  // ascending from x (it necessarily ends at a component).
  int codim_in_space(int x) const { return codim_in_space_[x]; }
  int codim_in_space(const std::string& x) const;

  // Generic points of the irreducible components (maximal elements) and
  // closed points (minimal elements), in points order.
  std::vector<int> component_indices() const;
  std::vector<int> closed_point_indices() const;
  std::vector<std::string> components() const;
  std::vector<std::string> closed_points() const;

  // Induced subposet on the given ascending index set. Covers are recomputed
  // for the induced order, so the result is valid for an arbitrary subset.
  SpectralPoset induced(const std::vector<int>& keep) const;

  friend bool operator==(const SpectralPoset& a, const SpectralPoset& b) {
    return a.points_ == b.points_ && a.covers_ == b.covers_ &&
           a.infinite_ == b.infinite_;
  }

 private:
  SpectralPoset() = default;

  void index_points_();       // fills index lookup, rejects duplicates
  void build_adjacency_();    // upper_/lower_ from covers_
  bool topo_sort_();          // fills topo_, false if a cycle exists
  void compute_leq_();        // reflexive-transitive closure
  void compute_dims_();       // dim_point_, codim_in_space_, dim_
  void finalize_();           // all of the above, asserting validity

  std::vector<std::string> points_;
  std::vector<std::pair<std::string, int>> index_;  // sorted by name
  std::vector<std::pair<int, int>> covers_;         // sorted (lower, upper)
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  std::vector<bool> infinite_;
  std::vector<int> topo_;                 // indices in topological order
  std::vector<std::vector<bool>> leq_;    // leq_[x][y]: x <= y
  std::vector<int> dim_point_;
  std::vector<int> codim_in_space_;
  int dim_ = 0;
};

}  // namespace specpos

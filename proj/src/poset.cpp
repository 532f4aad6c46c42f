#include "specpos/poset.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace specpos {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string cover_text(const std::string& a, const std::string& b) {
  return "(" + a + " < " + b + ")";
}

}  // namespace

void SpectralPoset::index_points_() {
  index_.clear();
  index_.reserve(points_.size());
  for (int i = 0; i < size(); ++i) index_.emplace_back(points_[i], i);
  std::sort(index_.begin(), index_.end());
  for (size_t k = 1; k < index_.size(); ++k) {
    if (index_[k].first == index_[k - 1].first) {
      throw ValidationError("duplicate point " + quoted(index_[k].first));
    }
  }
}

int SpectralPoset::index_of(const std::string& point) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), point,
      [](const auto& entry, const std::string& name) {
        return entry.first < name;
      });
  if (it == index_.end() || it->first != point) {
    throw UnknownPointError("unknown point " + quoted(point), point);
  }
  return it->second;
}

bool SpectralPoset::has_point(const std::string& point) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), point,
      [](const auto& entry, const std::string& name) {
        return entry.first < name;
      });
  return it != index_.end() && it->first == point;
}

void SpectralPoset::build_adjacency_() {
  upper_.assign(size(), {});
  lower_.assign(size(), {});
  for (const auto& [lo, hi] : covers_) {
    upper_[lo].push_back(hi);
    lower_[hi].push_back(lo);
  }
  // covers_ is sorted by (lower, upper), so upper_ rows are already
  // ascending; lower_ rows need a sort.
  for (auto& row : lower_) std::sort(row.begin(), row.end());
}

bool SpectralPoset::topo_sort_() {
  const int n = size();
  std::vector<int> pending(n);
  for (int v = 0; v < n; ++v) pending[v] = static_cast<int>(lower_[v].size());
  topo_.clear();
  topo_.reserve(n);
  std::vector<bool> done(n, false);
  // Smallest-index-first Kahn; n is small, a quadratic scan is fine and
  // keeps the order deterministic.
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!done[v] && pending[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    done[pick] = true;
    topo_.push_back(pick);
    for (int u : upper_[pick]) --pending[u];
  }
  return static_cast<int>(topo_.size()) == n;
}

void SpectralPoset::compute_leq_() {
  const int n = size();
  leq_.assign(n, std::vector<bool>(n, false));
  // Reverse topological order: leq_[v] = {v} union leq_ of upper covers.
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int v = *it;
    leq_[v][v] = true;
    for (int u : upper_[v]) {
      for (int w = 0; w < n; ++w) {
        if (leq_[u][w]) leq_[v][w] = true;
      }
    }
  }
}

void SpectralPoset::compute_dims_() {
  const int n = size();
  dim_point_.assign(n, 0);
  codim_in_space_.assign(n, 0);
  for (int v : topo_) {
    for (int lo : lower_[v]) {
      dim_point_[v] = std::max(dim_point_[v], dim_point_[lo] + 1);
    }
  }
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int v = *it;
    for (int hi : upper_[v]) {
      codim_in_space_[v] = std::max(codim_in_space_[v], codim_in_space_[hi] + 1);
    }
  }
  dim_ = 0;
  for (int v = 0; v < n; ++v) dim_ = std::max(dim_, dim_point_[v]);
}

void SpectralPoset::finalize_() {
  build_adjacency_();
  bool acyclic = topo_sort_();
  assert(acyclic);
  (void)acyclic;
  compute_leq_();
  compute_dims_();
}

SpectralPoset SpectralPoset::build(
    std::vector<std::string> points,
    std::vector<std::pair<std::string, std::string>> covers,
    std::vector<std::string> infinite_flags) {
  if (points.empty()) {
    throw ValidationError("a spectral poset must contain at least one point");
  }
  SpectralPoset p;
  p.points_ = std::move(points);
  p.index_points_();

  p.infinite_.assign(p.size(), false);
  for (const auto& flag : infinite_flags) {
    int i = p.index_of(flag);
    if (p.infinite_[i]) {
      throw ValidationError("duplicate infinite flag on " + quoted(flag));
    }
    p.infinite_[i] = true;
  }

  p.covers_.clear();
  p.covers_.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    int ia = p.index_of(a);
    int ib = p.index_of(b);
    if (ia == ib) {
      throw CycleError("cover " + cover_text(a, b) + " relates a point to itself",
                       {a});
    }
    p.covers_.emplace_back(ia, ib);
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (size_t k = 1; k < p.covers_.size(); ++k) {
    if (p.covers_[k] == p.covers_[k - 1]) {
      const auto& [lo, hi] = p.covers_[k];
      throw ValidationError("duplicate cover " +
                            cover_text(p.points_[lo], p.points_[hi]));
    }
  }

  p.build_adjacency_();
  if (!p.topo_sort_()) {
    // Extract one concrete cycle among the points Kahn could not schedule.
    std::vector<bool> scheduled(p.size(), false);
    for (int v : p.topo_) scheduled[v] = true;
    int start = 0;
    while (scheduled[start]) ++start;
    std::vector<int> walk;
    std::vector<int> seen_at(p.size(), -1);
    int v = start;
    while (seen_at[v] < 0) {
      seen_at[v] = static_cast<int>(walk.size());
      walk.push_back(v);
      for (int lo : p.lower_[v]) {
        if (!scheduled[lo]) {
          v = lo;  // every unscheduled point keeps an unscheduled lower cover
          break;
        }
      }
    }
    std::vector<std::string> cycle;
    std::string text;
    for (size_t k = seen_at[v]; k < walk.size(); ++k) {
      cycle.push_back(p.points_[walk[k]]);
    }
    // walk descends through covers; report the cycle in ascending order.
    std::reverse(cycle.begin(), cycle.end());
    for (const auto& name : cycle) text += name + " < ";
    text += cycle.front();
    throw CycleError("covers contain a directed cycle: " + text, cycle);
  }

  p.compute_leq_();
  for (const auto& [lo, hi] : p.covers_) {
    for (int mid : p.upper_[lo]) {
      if (mid != hi && p.leq_[mid][hi]) {
        throw NotReducedError(
            "cover " + cover_text(p.points_[lo], p.points_[hi]) +
                " is implied by a longer path through " +
                quoted(p.points_[mid]) + "; covers must be transitively reduced",
            {p.points_[lo], p.points_[hi]});
      }
    }
  }

  p.compute_dims_();
  return p;
}

std::vector<std::pair<std::string, std::string>> SpectralPoset::cover_names()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(covers_.size());
  for (const auto& [lo, hi] : covers_) {
    out.emplace_back(points_[lo], points_[hi]);
  }
  return out;
}

bool SpectralPoset::is_infinite(const std::string& point) const {
  return infinite_[index_of(point)];
}

std::vector<std::string> SpectralPoset::infinite_points() const {
  std::vector<std::string> out;
  for (int v = 0; v < size(); ++v) {
    if (infinite_[v]) out.push_back(points_[v]);
  }
  return out;
}

SpectralPoset SpectralPoset::with_infinite_flags(
    std::vector<std::string> flags) const {
  SpectralPoset p = *this;
  p.infinite_.assign(size(), false);
  for (const auto& flag : flags) {
    int i = index_of(flag);
    if (p.infinite_[i]) {
      throw ValidationError("duplicate infinite flag on " + quoted(flag));
    }
    p.infinite_[i] = true;
  }
  return p;
}

bool SpectralPoset::leq(const std::string& x, const std::string& y) const {
  return leq_[index_of(x)][index_of(y)];
}

std::vector<int> SpectralPoset::down_set(int x) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (leq_[v][x]) out.push_back(v);
  }
  return out;
}

std::vector<int> SpectralPoset::up_set(int x) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (leq_[x][v]) out.push_back(v);
  }
  return out;
}

std::vector<std::string> SpectralPoset::down_set(const std::string& x) const {
  std::vector<std::string> out;
  for (int v : down_set(index_of(x))) out.push_back(points_[v]);
  return out;
}

std::vector<std::string> SpectralPoset::up_set(const std::string& x) const {
  std::vector<std::string> out;
  for (int v : up_set(index_of(x))) out.push_back(points_[v]);
  return out;
}

std::vector<Chain> SpectralPoset::maximal_chains() const {
  std::vector<Chain> chains;
  std::vector<int> stack;
  // Depth-first from minimal elements, always extending through the
  // smallest-index upper cover first: output is lexicographic.
  auto extend = [&](auto&& self, int v) -> void {
    stack.push_back(v);
    if (upper_[v].empty()) {
      Chain c;
      for (int w : stack) c.elems.push_back(points_[w]);
      chains.push_back(std::move(c));
    } else {
      for (int u : upper_[v]) self(self, u);
    }
    stack.pop_back();
  };
  for (int v = 0; v < size(); ++v) {
    if (lower_[v].empty()) extend(extend, v);
  }
  return chains;
}

SaturatedLengths SpectralPoset::saturated_lengths(int x, int y) const {
  if (!leq_[x][y]) {
    throw NotComparableError("points " + quoted(points_[x]) + " and " +
                             quoted(points_[y]) +
                             " are not comparable (need x <= y)");
  }
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> shortest(size(), kUnset);
  std::vector<int> longest(size(), kUnset);
  shortest[x] = longest[x] = 0;
  for (int v : topo_) {
    if (v == x || !leq_[x][v] || !leq_[v][y]) continue;
    int lo_min = std::numeric_limits<int>::max();
    int lo_max = kUnset;
    for (int lo : lower_[v]) {
      if (shortest[lo] == kUnset) continue;
      lo_min = std::min(lo_min, shortest[lo]);
      lo_max = std::max(lo_max, longest[lo]);
    }
    // Every point in the closed interval [x, y] sits on a saturated chain
    // from x, so a predecessor inside the interval always exists.
    assert(lo_max != kUnset);
    shortest[v] = lo_min + 1;
    longest[v] = lo_max + 1;
  }
  return {shortest[y], longest[y]};
}

SaturatedLengths SpectralPoset::saturated_lengths(const std::string& x,
                                                  const std::string& y) const {
  return saturated_lengths(index_of(x), index_of(y));
}

Chain SpectralPoset::shortest_saturated_chain(int x, int y) const {
  SaturatedLengths target = saturated_lengths(x, y);
  // Walk forward from x, at each step taking the smallest-index upper
  // cover that still admits an optimal completion: that greedy choice is
  // exactly the lexicographically least optimal chain.
  Chain c;
  int v = x;
  c.elems.push_back(points_[v]);
  int remaining = target.shortest;
  while (v != y) {
    for (int u : upper_[v]) {
      if (!leq_[u][y]) continue;
      if (saturated_lengths(u, y).shortest == remaining - 1) {
        v = u;
        break;
      }
    }
    c.elems.push_back(points_[v]);
    --remaining;
  }
  return c;
}

Chain SpectralPoset::longest_saturated_chain(int x, int y) const {
  SaturatedLengths target = saturated_lengths(x, y);
  Chain c;
  int v = x;
  c.elems.push_back(points_[v]);
  int remaining = target.longest;
  while (v != y) {
    for (int u : upper_[v]) {
      if (!leq_[u][y]) continue;
      if (saturated_lengths(u, y).longest == remaining - 1) {
        v = u;
        break;
      }
    }
    c.elems.push_back(points_[v]);
    --remaining;
  }
  return c;
}

int SpectralPoset::dim_point(const std::string& x) const {
  return dim_point_[index_of(x)];
}

int SpectralPoset::codim(int x, int y) const {
  return saturated_lengths(x, y).longest;
}

int SpectralPoset::codim(const std::string& x, const std::string& y) const {
  return codim(index_of(x), index_of(y));
}

int SpectralPoset::codim_in_space(const std::string& x) const {
  return codim_in_space_[index_of(x)];
}

std::vector<int> SpectralPoset::component_indices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (upper_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<int> SpectralPoset::closed_point_indices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (lower_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::string> SpectralPoset::components() const {
  std::vector<std::string> out;
  for (int v : component_indices()) out.push_back(points_[v]);
  return out;
}

std::vector<std::string> SpectralPoset::closed_points() const {
  std::vector<std::string> out;
  for (int v : closed_point_indices()) out.push_back(points_[v]);
  return out;
}

SpectralPoset SpectralPoset::induced(const std::vector<int>& keep) const {
  assert(!keep.empty());
  assert(std::is_sorted(keep.begin(), keep.end()));
  const int m = static_cast<int>(keep.size());
  SpectralPoset p;
  p.points_.reserve(m);
  p.infinite_.reserve(m);
  for (int v : keep) {
    p.points_.push_back(points_[v]);
    p.infinite_.push_back(infinite_[v]);
  }
  p.index_points_();
  // Covers of the induced order: comparable pairs with no retained point
  // strictly between them. (For up-sets and down-sets this coincides with
  // restricting the original covers, but this is correct for any subset.)
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || !leq_[keep[a]][keep[b]]) continue;
      bool direct = true;
      for (int c = 0; c < m && direct; ++c) {
        if (c == a || c == b) continue;
        if (leq_[keep[a]][keep[c]] && leq_[keep[c]][keep[b]]) direct = false;
      }
      if (direct) p.covers_.emplace_back(a, b);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  p.finalize_();
  return p;
}

}  // namespace specpos

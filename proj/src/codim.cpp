#include "specpos/codim.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>

#include "specpos/analysis.hpp"

namespace specpos {

namespace {

// Signed length of a walk given as point indices, each consecutive pair a
// cover in one direction: +1 per downward step, -1 per upward step.
int walk_signed_length(const SpectralPoset& p, const std::vector<int>& walk) {
  int total = 0;
  for (size_t k = 0; k + 1 < walk.size(); ++k) {
    int a = walk[k];
    int b = walk[k + 1];
    bool down = std::binary_search(p.lower_covers(a).begin(),
                                   p.lower_covers(a).end(), b);
    if (down) {
      total += 1;
    } else {
      assert(std::binary_search(p.upper_covers(a).begin(),
                                p.upper_covers(a).end(), b));
      total -= 1;
    }
  }
  return total;
}

std::vector<int> path_to_root(const std::vector<int>& parent, int v) {
  std::vector<int> path;
  while (v >= 0) {
    path.push_back(v);
    v = parent[v];
  }
  return path;
}

// Conflict cycle for a violated cover (lo, hi): tree path lo -> lca, then
// lca -> hi, closed by the cover itself. Simple by construction.
std::vector<int> conflict_cycle(const std::vector<int>& parent, int lo,
                                int hi, int n) {
  std::vector<int> a = path_to_root(parent, lo);
  std::vector<int> b = path_to_root(parent, hi);
  std::vector<int> depth_in_b(n, -1);
  for (size_t k = 0; k < b.size(); ++k) depth_in_b[b[k]] = static_cast<int>(k);
  size_t cut = 0;
  while (depth_in_b[a[cut]] < 0) ++cut;
  int lca = a[cut];
  std::vector<int> cycle(a.begin(), a.begin() + cut + 1);
  for (int k = depth_in_b[lca] - 1; k >= 0; --k) cycle.push_back(b[k]);
  cycle.push_back(lo);
  return cycle;
}

// Start the cyclic walk at its lexicographically least point name, keeping
// the traversal direction.
std::vector<int> rotate_cycle(const SpectralPoset& p,
                              const std::vector<int>& cycle) {
  size_t best = 0;
  for (size_t k = 1; k + 1 < cycle.size(); ++k) {
    if (p.point(cycle[k]) < p.point(cycle[best])) best = k;
  }
  std::vector<int> out;
  size_t len = cycle.size() - 1;  // cycle repeats its first point at the end
  for (size_t k = 0; k <= len; ++k) out.push_back(cycle[(best + k) % len]);
  return out;
}

}  // namespace

CodimResult solve_codim_function(const SpectralPoset& p) {
  const int n = p.size();
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> phi(n, kUnset);
  std::vector<int> parent(n, -1);
  std::vector<int> component(n, -1);
  int n_components = 0;

  for (int seed = 0; seed < n; ++seed) {
    if (phi[seed] != kUnset) continue;
    int comp = n_components++;
    phi[seed] = 0;
    component[seed] = comp;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int lo : p.lower_covers(v)) {
        if (phi[lo] != kUnset) continue;
        phi[lo] = phi[v] + 1;
        parent[lo] = v;
        component[lo] = comp;
        queue.push_back(lo);
      }
      for (int hi : p.upper_covers(v)) {
        if (phi[hi] != kUnset) continue;
        phi[hi] = phi[v] - 1;
        parent[hi] = v;
        component[hi] = comp;
        queue.push_back(hi);
      }
    }
  }

  // With the spanning forest fixed, every remaining constraint violation
  // closes a cycle of nonzero signed length.
  std::vector<int> best_cycle;
  for (const auto& [lo, hi] : p.covers()) {
    if (phi[lo] == phi[hi] + 1) continue;
    std::vector<int> cycle = conflict_cycle(parent, lo, hi, n);
    if (best_cycle.empty() || cycle.size() < best_cycle.size()) {
      best_cycle = std::move(cycle);
    }
  }
  if (!best_cycle.empty()) {
    std::vector<int> walk = rotate_cycle(p, best_cycle);
    CodimCertificate cert;
    cert.signed_length = walk_signed_length(p, walk);
    assert(cert.signed_length != 0);
    for (int v : walk) cert.walk.push_back(p.point(v));
    return cert;
  }

  std::vector<int> comp_min(n_components, std::numeric_limits<int>::max());
  for (int v = 0; v < n; ++v) {
    comp_min[component[v]] = std::min(comp_min[component[v]], phi[v]);
  }
  CodimAssignment assignment;
  for (int v = 0; v < n; ++v) {
    assignment.values[p.point(v)] = phi[v] - comp_min[component[v]];
  }
  return assignment;
}

bool is_codim_function(const SpectralPoset& p,
                       const std::map<std::string, int>& d) {
  std::vector<int> values(p.size());
  for (int v = 0; v < p.size(); ++v) {
    auto it = d.find(p.point(v));
    if (it == d.end()) {
      throw MissingValueError("candidate codimension function has no value "
                              "for point '" +
                              p.point(v) + "'");
    }
    values[v] = it->second;
  }
  for (const auto& [lo, hi] : p.covers()) {
    if (values[lo] != values[hi] + 1) return false;
  }
  return true;
}

std::map<std::string, int> candidate_codim(const SpectralPoset& p) {
  std::map<std::string, int> d;
  for (int v = 0; v < p.size(); ++v) d[p.point(v)] = p.codim_in_space(v);
  return d;
}

std::map<std::string, int> candidate_neg_dim(const SpectralPoset& p) {
  std::map<std::string, int> d;
  for (int v = 0; v < p.size(); ++v) d[p.point(v)] = -p.dim_point(v);
  return d;
}

bool all_local_posets_catenary_equidimensional(const SpectralPoset& p) {
  for (const auto& x : p.points()) {
    if (!local_is_catenary(p, x)) return false;
    if (!local_is_equidimensional(p, x)) return false;
  }
  return true;
}

}  // namespace specpos

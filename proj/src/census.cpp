#include "specpos/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "specpos/codim.hpp"

namespace specpos {

namespace {

constexpr int kCanonicalCap = 12;

// ---- small-poset machinery ----------------------------------------------
// A strict order on points 0..n-1 as per-point down-set bitmasks.

struct MaskOrder {
  int n = 0;
  std::vector<uint16_t> below;  // below[i]: mask of j with j < i
};

struct CoverMasks {
  std::vector<uint16_t> lower;  // lower[i]: mask of lower covers of i
  std::vector<uint16_t> upper;
};

MaskOrder to_masks(const SpectralPoset& p) {
  MaskOrder m;
  m.n = p.size();
  m.below.assign(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (i != j && p.leq(j, i)) m.below[i] |= static_cast<uint16_t>(1u << j);
    }
  }
  return m;
}

CoverMasks cover_masks(const MaskOrder& m) {
  std::vector<uint16_t> above(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if ((m.below[i] >> j) & 1u) above[j] |= static_cast<uint16_t>(1u << i);
    }
  }
  CoverMasks c;
  c.lower.assign(m.n, 0);
  c.upper.assign(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (!((m.below[i] >> j) & 1u)) continue;
      if ((m.below[i] & above[j]) == 0) {  // nothing strictly between
        c.lower[i] |= static_cast<uint16_t>(1u << j);
        c.upper[j] |= static_cast<uint16_t>(1u << i);
      }
    }
  }
  return c;
}

int longest_path(const std::vector<uint16_t>& step, std::vector<int>& memo,
                 int v) {
  if (memo[v] >= 0) return memo[v];
  int best = 0;
  for (int u = 0; u < static_cast<int>(memo.size()); ++u) {
    if ((step[v] >> u) & 1u) best = std::max(best, longest_path(step, memo, u) + 1);
  }
  return memo[v] = best;
}

// Equitable coloring: start from degree and level statistics, then refine by
// neighbor color multisets until stable. Color ids are assigned by sorting
// signatures, so they are isomorphism-invariant.
std::vector<int> refine_colors(const MaskOrder& m, const CoverMasks& c) {
  const int n = m.n;
  std::vector<int> depth(n, -1), height(n, -1);
  for (int v = 0; v < n; ++v) longest_path(c.lower, depth, v);
  for (int v = 0; v < n; ++v) longest_path(c.upper, height, v);

  using Signature = std::vector<int>;
  std::vector<Signature> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v] = {depth[v], height[v], std::popcount(uint32_t(c.lower[v])),
              std::popcount(uint32_t(c.upper[v]))};
  }
  std::vector<int> color(n, 0);
  int n_colors = 0;
  for (;;) {
    std::vector<Signature> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    }
    bool stable = static_cast<int>(sorted.size()) == n_colors && next == color;
    color = next;
    n_colors = static_cast<int>(sorted.size());
    if (stable || n_colors == n) break;
    for (int v = 0; v < n; ++v) {
      Signature s{color[v]};
      std::vector<int> side;
      for (int u = 0; u < n; ++u) {
        if ((c.lower[v] >> u) & 1u) side.push_back(color[u]);
      }
      std::sort(side.begin(), side.end());
      s.push_back(-1);
      s.insert(s.end(), side.begin(), side.end());
      side.clear();
      for (int u = 0; u < n; ++u) {
        if ((c.upper[v] >> u) & 1u) side.push_back(color[u]);
      }
      std::sort(side.begin(), side.end());
      s.push_back(-1);
      s.insert(s.end(), side.begin(), side.end());
      sig[v] = std::move(s);
    }
  }
  return color;
}

// perm maps old index -> new position; the encoding is the strict-order
// matrix in new positions, row-major: s[a*n+b] == '1' iff b < a.
std::string encode_perm(const MaskOrder& m, const std::vector<int>& perm) {
  const int n = m.n;
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::string s(static_cast<size_t>(n) * n, '0');
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((m.below[inv[a]] >> inv[b]) & 1u) s[a * n + b] = '1';
    }
  }
  return s;
}

// Minimal encoding over all permutations that keep each refinement cell in
// its position block. The refined partition is isomorphism-invariant and
// the minimum runs over all tie-breaks, so equal keys mean isomorphic
// posets and vice versa. Points with identical below and above masks are
// interchangeable (swapping them fixes the encoding), so only one ordering
// per multiset of such twins is visited.
std::string min_encoding(const MaskOrder& m) {
  const int n = m.n;
  CoverMasks c = cover_masks(m);
  std::vector<int> color = refine_colors(m, c);

  std::vector<uint16_t> above(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((m.below[i] >> j) & 1u) above[j] |= static_cast<uint16_t>(1u << i);
    }
  }

  int n_colors = 0;
  for (int v = 0; v < n; ++v) n_colors = std::max(n_colors, color[v] + 1);

  struct CellPlan {
    int base = 0;
    std::vector<std::vector<int>> twin_groups;  // ascending members
    std::vector<int> slot_ids;                  // sorted group ids
  };
  std::vector<CellPlan> plan(n_colors);
  {
    std::vector<std::vector<int>> cells(n_colors);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    int base = 0;
    for (int k = 0; k < n_colors; ++k) {
      plan[k].base = base;
      base += static_cast<int>(cells[k].size());
      std::map<std::pair<uint16_t, uint16_t>, int> group_of;
      for (int v : cells[k]) {
        auto key = std::make_pair(m.below[v], above[v]);
        auto [it, fresh] =
            group_of.emplace(key, static_cast<int>(plan[k].twin_groups.size()));
        if (fresh) plan[k].twin_groups.emplace_back();
        plan[k].twin_groups[it->second].push_back(v);
        plan[k].slot_ids.push_back(it->second);
      }
      std::sort(plan[k].slot_ids.begin(), plan[k].slot_ids.end());
    }
  }

  std::vector<int> perm(n, -1);
  std::string best;
  auto assign_cell = [&](auto&& self, int cell) -> void {
    if (cell == n_colors) {
      std::string s = encode_perm(m, perm);
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    CellPlan& cp = plan[cell];
    std::vector<int> ids = cp.slot_ids;  // already sorted ascending
    std::vector<size_t> taken(cp.twin_groups.size());
    do {
      std::fill(taken.begin(), taken.end(), 0);
      for (size_t k = 0; k < ids.size(); ++k) {
        int member = cp.twin_groups[ids[k]][taken[ids[k]]++];
        perm[member] = cp.base + static_cast<int>(k);
      }
      self(self, cell + 1);
    } while (std::next_permutation(ids.begin(), ids.end()));
  };
  assign_cell(assign_cell, 0);
  return best;
}

SpectralPoset poset_from_encoding(int n, const std::string& s) {
  std::vector<std::string> points;
  points.reserve(n);
  for (int v = 0; v < n; ++v) points.push_back("p" + std::to_string(v));
  auto rel = [&](int b, int a) {  // b < a
    return s[static_cast<size_t>(a) * n + b] == '1';
  };
  std::vector<std::pair<std::string, std::string>> covers;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!rel(b, a)) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k) {
        if (k != a && k != b && rel(b, k) && rel(k, a)) direct = false;
      }
      if (direct) covers.emplace_back(points[b], points[a]);
    }
  }
  return SpectralPoset::build(std::move(points), std::move(covers));
}

// Every naturally labeled poset on 0..n-1 (order contained in the integer
// order), generated by picking for each new element an order ideal of the
// part already built as its strict down-set. Each poset is produced exactly
// once and every isomorphism class has at least one natural labeling.
void generate_natural_orders(
    int n, const std::function<void(const MaskOrder&)>& visit) {
  MaskOrder m;
  m.n = n;
  m.below.assign(n, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      visit(m);
      return;
    }
    for (uint32_t ideal = 0; ideal < (1u << k); ++ideal) {
      bool ok = true;
      for (int d = 0; d < k && ok; ++d) {
        if ((ideal >> d) & 1u) ok = (m.below[d] & ~ideal) == 0;
      }
      if (!ok) continue;
      m.below[k] = static_cast<uint16_t>(ideal);
      self(self, k + 1);
    }
    m.below[k] = 0;
  };
  rec(rec, 0);
}

void check_enumeration_bounds(int n, int cap) {
  if (cap > kHardCensusCap) {
    throw CapExceededError("cap " + std::to_string(cap) +
                           " exceeds the hard enumeration cap of " +
                           std::to_string(kHardCensusCap));
  }
  if (n < 1) throw ValidationError("enumeration needs at least one point");
  if (n > cap) {
    throw CapExceededError("n = " + std::to_string(n) +
                           " exceeds the enumeration cap of " +
                           std::to_string(cap) +
                           " (raise --cap, enumeration cost grows steeply)");
  }
}

// Deterministic work distribution: results are keyed by index, so any
// scheduling yields the same output.
template <typename Fn>
void parallel_for(int jobs, int count, Fn&& fn) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (error) std::rethrow_exception(error);
}

// Everything verify_implications needs about one poset.
struct Facts {
  bool equidimensional;
  bool equicodimensional;
  bool catenary;
  bool weakly;
  bool biequidimensional;
  bool dimension_formula;
  bool dim_additivity;
  bool codim_additivity;
  bool closed_point_criterion;
  bool component_down_sets_equicodimensional;
  bool local_posets_good;
  bool candidate_codim_valid;
  bool solver_found_assignment;
};

Facts facts_of(const SpectralPoset& p) {
  Facts f;
  f.equidimensional = is_equidimensional(p);
  f.equicodimensional = is_equicodimensional(p);
  f.catenary = is_catenary(p);
  f.weakly = f.equidimensional && f.equicodimensional && f.catenary;
  f.biequidimensional = is_biequidimensional(p);
  f.dimension_formula = dimension_formula_holds(p);
  f.dim_additivity = dim_additivity_holds(p);
  f.codim_additivity = codim_additivity_holds(p);
  f.closed_point_criterion = closed_point_local_criterion(p);
  f.component_down_sets_equicodimensional = true;
  for (int c : p.component_indices()) {
    if (!is_equicodimensional(p.induced(p.down_set(c)))) {
      f.component_down_sets_equicodimensional = false;
      break;
    }
  }
  f.local_posets_good = all_local_posets_catenary_equidimensional(p);
  f.candidate_codim_valid = is_codim_function(p, candidate_codim(p));
  f.solver_found_assignment = has_assignment(solve_codim_function(p));
  return f;
}

struct CheckDef {
  const char* name;
  bool (*holds)(const Facts&);
};

constexpr CheckDef kImplicationChecks[] = {
    {"biequidimensional implies weakly biequidimensional",
     [](const Facts& f) { return !f.biequidimensional || f.weakly; }},
    {"equidimensional + catenary + equicodimensional component closures "
     "implies biequidimensional",
     [](const Facts& f) {
       return !(f.equidimensional && f.catenary &&
                f.component_down_sets_equicodimensional) ||
              f.biequidimensional;
     }},
    {"biequidimensional iff equidimensional with additive dimension",
     [](const Facts& f) {
       return f.biequidimensional ==
              (f.equidimensional && f.dim_additivity);
     }},
    {"biequidimensional iff equicodimensional with additive codimension",
     [](const Facts& f) {
       return f.biequidimensional ==
              (f.equicodimensional && f.codim_additivity);
     }},
    {"biequidimensional iff the closed-point local criterion holds",
     [](const Facts& f) {
       return f.biequidimensional == f.closed_point_criterion;
     }},
    {"biequidimensional implies the dimension formula",
     [](const Facts& f) {
       return !f.biequidimensional || f.dimension_formula;
     }},
    {"biequidimensional implies codim_in_space is a codimension function",
     [](const Facts& f) {
       return !f.biequidimensional ||
              (f.candidate_codim_valid && f.solver_found_assignment);
     }},
    {"codim_in_space is a codimension function iff all local posets are "
     "catenary and equidimensional",
     [](const Facts& f) {
       return f.candidate_codim_valid == f.local_posets_good;
     }},
};

}  // namespace

std::vector<std::string> census_property_names() {
  return {"equidimensional",
          "equicodimensional",
          "catenary",
          "weakly_biequidimensional",
          "biequidimensional",
          "dimension_formula",
          "dim_additivity",
          "codim_additivity",
          "local_rings_catenary_equidimensional"};
}

std::vector<bool> report_property_vector(const AnalysisReport& r) {
  return {r.equidimensional,
          r.equicodimensional,
          r.catenary,
          r.weakly_biequidimensional,
          r.biequidimensional,
          r.dimension_formula,
          r.dim_additivity,
          r.codim_additivity,
          r.local_rings_catenary_equidimensional};
}

std::vector<SpectralPoset> enumerate_posets(int n, bool up_to_iso, int cap) {
  check_enumeration_bounds(n, cap);
  std::vector<SpectralPoset> out;
  std::unordered_set<std::string> seen;
  generate_natural_orders(n, [&](const MaskOrder& m) {
    if (up_to_iso) {
      std::string key = min_encoding(m);
      if (seen.insert(key).second) out.push_back(poset_from_encoding(n, key));
    } else {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::string s = encode_perm(m, perm);
        if (seen.insert(s).second) out.push_back(poset_from_encoding(n, s));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  });
  return out;
}

std::vector<CensusRow> census(int n, int cap, int jobs) {
  std::vector<SpectralPoset> posets = enumerate_posets(n, true, cap);
  std::vector<std::vector<bool>> vectors(posets.size());
  parallel_for(jobs, static_cast<int>(posets.size()),
               [&](int i) { vectors[i] = report_property_vector(classify(posets[i])); });
  std::map<std::vector<bool>, long> grouped;
  for (const auto& v : vectors) ++grouped[v];
  std::vector<CensusRow> rows;
  rows.reserve(grouped.size());
  for (const auto& [vec, count] : grouped) {
    rows.push_back(CensusRow{n, vec, count});
  }
  return rows;
}

ImplicationReport verify_implications(int n, int cap, int jobs) {
  std::vector<SpectralPoset> posets = enumerate_posets(n, true, cap);
  constexpr int n_checks =
      static_cast<int>(std::size(kImplicationChecks));
  std::vector<uint32_t> violated(posets.size(), 0);
  parallel_for(jobs, static_cast<int>(posets.size()), [&](int i) {
    Facts f = facts_of(posets[i]);
    uint32_t mask = 0;
    for (int c = 0; c < n_checks; ++c) {
      if (!kImplicationChecks[c].holds(f)) mask |= 1u << c;
    }
    violated[i] = mask;
  });

  ImplicationReport report;
  report.n_points = n;
  report.all_passed = true;
  for (int c = 0; c < n_checks; ++c) {
    ImplicationCheck check;
    check.name = kImplicationChecks[c].name;
    check.passed = true;
    for (size_t i = 0; i < posets.size(); ++i) {
      if ((violated[i] >> c) & 1u) {
        check.passed = false;
        check.counterexample = posets[i];
        break;
      }
    }
    report.all_passed = report.all_passed && check.passed;
    report.checks.push_back(std::move(check));
  }
  return report;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = {
      Property::equidimensional,
      Property::equicodimensional,
      Property::catenary,
      Property::weakly_biequidimensional,
      Property::biequidimensional,
      Property::dimension_formula,
      Property::dim_additivity,
      Property::codim_additivity,
      Property::local_rings_catenary_equidimensional,
      Property::codim_function_exists,
      Property::noetherian_obstruction_free,
  };
  return props;
}

std::string property_name(Property p) {
  switch (p) {
    case Property::equidimensional: return "equidimensional";
    case Property::equicodimensional: return "equicodimensional";
    case Property::catenary: return "catenary";
    case Property::weakly_biequidimensional:
      return "weakly_biequidimensional";
    case Property::biequidimensional: return "biequidimensional";
    case Property::dimension_formula: return "dimension_formula";
    case Property::dim_additivity: return "dim_additivity";
    case Property::codim_additivity: return "codim_additivity";
    case Property::local_rings_catenary_equidimensional:
      return "local_rings_catenary_equidimensional";
    case Property::codim_function_exists: return "codim_function_exists";
    case Property::noetherian_obstruction_free:
      return "noetherian_obstruction_free";
  }
  return "?";
}

std::optional<Property> property_from_string(const std::string& name) {
  for (Property p : all_properties()) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

bool evaluate_property(const SpectralPoset& poset, Property p) {
  switch (p) {
    case Property::equidimensional: return is_equidimensional(poset);
    case Property::equicodimensional: return is_equicodimensional(poset);
    case Property::catenary: return is_catenary(poset);
    case Property::weakly_biequidimensional:
      return is_weakly_biequidimensional(poset);
    case Property::biequidimensional: return is_biequidimensional(poset);
    case Property::dimension_formula: return dimension_formula_holds(poset);
    case Property::dim_additivity: return dim_additivity_holds(poset);
    case Property::codim_additivity: return codim_additivity_holds(poset);
    case Property::local_rings_catenary_equidimensional:
      return all_local_posets_catenary_equidimensional(poset);
    case Property::codim_function_exists:
      return has_assignment(solve_codim_function(poset));
    case Property::noetherian_obstruction_free:
      return noetherian_obstructions(poset).empty();
  }
  return false;
}

std::optional<MinimalSearchResult> find_minimal(
    const std::vector<Property>& require_true,
    const std::vector<Property>& require_false, int cap, int jobs) {
  for (int n = 1; n <= cap; ++n) {
    std::vector<SpectralPoset> posets = enumerate_posets(n, true, cap);
    std::vector<char> hit(posets.size(), 0);
    parallel_for(jobs, static_cast<int>(posets.size()), [&](int i) {
      for (Property p : require_true) {
        if (!evaluate_property(posets[i], p)) return;
      }
      for (Property p : require_false) {
        if (evaluate_property(posets[i], p)) return;
      }
      hit[i] = 1;
    });
    for (size_t i = 0; i < posets.size(); ++i) {
      if (hit[i]) return MinimalSearchResult{n, posets[i]};
    }
  }
  return std::nullopt;
}

SpectralPoset canonical_form(const SpectralPoset& p) {
  if (p.size() > kCanonicalCap) {
    throw CapExceededError("canonical_form supports at most " +
                           std::to_string(kCanonicalCap) + " points");
  }
  MaskOrder m = to_masks(p);
  return poset_from_encoding(p.size(), min_encoding(m));
}

bool isomorphic(const SpectralPoset& a, const SpectralPoset& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > kCanonicalCap || b.size() > kCanonicalCap) {
    throw CapExceededError("isomorphism check supports at most " +
                           std::to_string(kCanonicalCap) + " points");
  }
  return min_encoding(to_masks(a)) == min_encoding(to_masks(b));
}

}  // namespace specpos

#include "specpos/analysis.hpp"

#include <optional>
#include <sstream>

namespace specpos {

namespace {

struct PairCex {
  int first = -1;
  int second = -1;
};

// First pair of maximal elements with different dim_point, if any.
std::optional<PairCex> equidim_cex(const SpectralPoset& p) {
  auto comps = p.component_indices();
  for (size_t k = 1; k < comps.size(); ++k) {
    if (p.dim_point(comps[k]) != p.dim_point(comps[0])) {
      return PairCex{comps[0], comps[k]};
    }
  }
  return std::nullopt;
}

// First pair of minimal elements with different codim_in_space, if any.
std::optional<PairCex> equicodim_cex(const SpectralPoset& p) {
  auto mins = p.closed_point_indices();
  for (size_t k = 1; k < mins.size(); ++k) {
    if (p.codim_in_space(mins[k]) != p.codim_in_space(mins[0])) {
      return PairCex{mins[0], mins[k]};
    }
  }
  return std::nullopt;
}

// First comparable pair whose saturated chains differ in length.
std::optional<PairCex> catenary_cex(const SpectralPoset& p) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      auto lens = p.saturated_lengths(x, y);
      if (lens.shortest != lens.longest) return PairCex{x, y};
    }
  }
  return std::nullopt;
}

// First pair of maximal chains of different lengths.
std::optional<std::pair<Chain, Chain>> biequidim_cex(const SpectralPoset& p) {
  auto chains = p.maximal_chains();
  for (size_t k = 1; k < chains.size(); ++k) {
    if (chains[k].length() != chains[0].length()) {
      return std::make_pair(chains[0], chains[k]);
    }
  }
  return std::nullopt;
}

std::optional<PairCex> dim_additivity_cex(const SpectralPoset& p) {
  for (int y = 0; y < p.size(); ++y) {
    for (int z = 0; z < p.size(); ++z) {
      if (y == z || !p.leq(y, z)) continue;
      if (p.dim_point(z) != p.dim_point(y) + p.codim(y, z)) {
        return PairCex{y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<PairCex> codim_additivity_cex(const SpectralPoset& p) {
  for (int y = 0; y < p.size(); ++y) {
    for (int z = 0; z < p.size(); ++z) {
      if (y == z || !p.leq(y, z)) continue;
      if (p.codim_in_space(y) != p.codim(y, z) + p.codim_in_space(z)) {
        return PairCex{y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<int> dimension_formula_cex(const SpectralPoset& p) {
  for (int y = 0; y < p.size(); ++y) {
    if (p.dim_point(y) + p.codim_in_space(y) != p.dim()) return y;
  }
  return std::nullopt;
}

// For a point x whose local poset is not equidimensional: the first two
// components above x with different codim(x, -).
std::optional<PairCex> local_equidim_cex(const SpectralPoset& p, int x) {
  std::vector<int> tops;
  for (int c : p.component_indices()) {
    if (p.leq(x, c)) tops.push_back(c);
  }
  for (size_t k = 1; k < tops.size(); ++k) {
    if (p.codim(x, tops[k]) != p.codim(x, tops[0])) {
      return PairCex{tops[0], tops[k]};
    }
  }
  return std::nullopt;
}

bool local_catenary_at(const SpectralPoset& p, int x) {
  return !catenary_cex(p.induced(p.up_set(x))).has_value();
}

std::string chain_text(const Chain& c) {
  std::string out;
  for (size_t k = 0; k < c.elems.size(); ++k) {
    if (k) out += " < ";
    out += c.elems[k];
  }
  return out;
}

}  // namespace

bool is_equidimensional(const SpectralPoset& p) {
  return !equidim_cex(p).has_value();
}

bool is_equicodimensional(const SpectralPoset& p) {
  return !equicodim_cex(p).has_value();
}

bool is_catenary(const SpectralPoset& p) {
  return !catenary_cex(p).has_value();
}

bool is_weakly_biequidimensional(const SpectralPoset& p) {
  return is_equidimensional(p) && is_equicodimensional(p) && is_catenary(p);
}

bool is_biequidimensional(const SpectralPoset& p) {
  return !biequidim_cex(p).has_value();
}

bool dim_additivity_holds(const SpectralPoset& p) {
  return !dim_additivity_cex(p).has_value();
}

bool codim_additivity_holds(const SpectralPoset& p) {
  return !codim_additivity_cex(p).has_value();
}

bool dimension_formula_holds(const SpectralPoset& p) {
  return !dimension_formula_cex(p).has_value();
}

SpectralPoset local_poset(const SpectralPoset& p, const std::string& x) {
  return p.induced(p.up_set(p.index_of(x)));
}

bool local_is_catenary(const SpectralPoset& p, const std::string& x) {
  return local_catenary_at(p, p.index_of(x));
}

bool local_is_equidimensional(const SpectralPoset& p, const std::string& x) {
  return !local_equidim_cex(p, p.index_of(x)).has_value();
}

bool closed_point_local_criterion(const SpectralPoset& p) {
  for (int m : p.closed_point_indices()) {
    if (p.codim_in_space(m) != p.dim()) return false;
    if (local_equidim_cex(p, m).has_value()) return false;
    if (!local_catenary_at(p, m)) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::string>> noetherian_obstructions(
    const SpectralPoset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      if (p.codim(x, y) < 2) continue;
      bool has_infinite_mid = false;
      for (int z = 0; z < p.size() && !has_infinite_mid; ++z) {
        if (z == x || z == y) continue;
        if (p.leq(x, z) && p.leq(z, y) && p.is_infinite(z)) {
          has_infinite_mid = true;
        }
      }
      if (!has_infinite_mid) out.emplace_back(p.point(x), p.point(y));
    }
  }
  return out;
}

AnalysisReport classify(const SpectralPoset& p) {
  AnalysisReport r;
  r.n_points = p.size();
  r.dimension = p.dim();

  auto eqd = equidim_cex(p);
  auto eqc = equicodim_cex(p);
  auto cat = catenary_cex(p);
  auto bieq = biequidim_cex(p);
  auto dima = dim_additivity_cex(p);
  auto codima = codim_additivity_cex(p);
  auto dimf = dimension_formula_cex(p);

  r.equidimensional = !eqd;
  r.equicodimensional = !eqc;
  r.catenary = !cat;
  r.weakly_biequidimensional =
      r.equidimensional && r.equicodimensional && r.catenary;
  r.biequidimensional = !bieq;
  r.dimension_formula = !dimf;
  r.dim_additivity = !dima;
  r.codim_additivity = !codima;

  // First point whose local poset fails, with the reason.
  std::optional<int> local_bad;
  bool local_bad_catenary = false;
  std::optional<PairCex> local_bad_pair;
  for (int x = 0; x < p.size() && !local_bad; ++x) {
    if (!local_catenary_at(p, x)) {
      local_bad = x;
      local_bad_catenary = true;
    } else if (auto cex = local_equidim_cex(p, x)) {
      local_bad = x;
      local_bad_pair = cex;
    }
  }
  r.local_rings_catenary_equidimensional = !local_bad.has_value();

  r.noetherian_violations = noetherian_obstructions(p);

  // The characterizations below are provable equalities; a mismatch means
  // the implementation is broken somewhere, so fail loudly.
  if (r.biequidimensional != (r.equidimensional && r.dim_additivity)) {
    throw InternalInconsistencyError(
        "biequidimensionality disagrees with the equidimensional + dim "
        "additivity characterization");
  }
  if (r.biequidimensional != (r.equicodimensional && r.codim_additivity)) {
    throw InternalInconsistencyError(
        "biequidimensionality disagrees with the equicodimensional + codim "
        "additivity characterization");
  }
  if (r.biequidimensional != closed_point_local_criterion(p)) {
    throw InternalInconsistencyError(
        "biequidimensionality disagrees with the closed-point local "
        "criterion");
  }

  auto add_witness = [&r](const std::string& property, std::string detail) {
    r.witnesses.push_back(Witness{property, std::move(detail)});
  };

  if (eqd) {
    std::ostringstream os;
    os << "components " << p.point(eqd->first) << " (dimension "
       << p.dim_point(eqd->first) << ") and " << p.point(eqd->second)
       << " (dimension " << p.dim_point(eqd->second) << ")";
    add_witness("equidimensional", os.str());
  }
  if (eqc) {
    std::ostringstream os;
    os << "closed points " << p.point(eqc->first) << " (codimension "
       << p.codim_in_space(eqc->first) << ") and " << p.point(eqc->second)
       << " (codimension " << p.codim_in_space(eqc->second) << ")";
    add_witness("equicodimensional", os.str());
  }
  if (cat) {
    auto shortest = p.shortest_saturated_chain(cat->first, cat->second);
    auto longest = p.longest_saturated_chain(cat->first, cat->second);
    std::ostringstream os;
    os << "saturated chains " << chain_text(shortest) << " (length "
       << shortest.length() << ") and " << chain_text(longest) << " (length "
       << longest.length() << ")";
    add_witness("catenary", os.str());
  }
  if (!r.weakly_biequidimensional) {
    std::string reason = eqd   ? "not equidimensional"
                         : eqc ? "not equicodimensional"
                               : "not catenary";
    add_witness("weakly_biequidimensional", reason);
  }
  if (bieq) {
    std::ostringstream os;
    os << "maximal chains " << chain_text(bieq->first) << " (length "
       << bieq->first.length() << ") and " << chain_text(bieq->second)
       << " (length " << bieq->second.length() << ")";
    add_witness("biequidimensional", os.str());
  }
  if (dimf) {
    std::ostringstream os;
    os << "point " << p.point(*dimf) << ": dim " << p.dim_point(*dimf)
       << " + codim " << p.codim_in_space(*dimf) << " = "
       << p.dim_point(*dimf) + p.codim_in_space(*dimf) << " != dim(X) = "
       << p.dim();
    add_witness("dimension_formula", os.str());
  }
  if (dima) {
    std::ostringstream os;
    os << "Y = " << p.point(dima->first) << ", Z = " << p.point(dima->second)
       << ": dim(Z) = " << p.dim_point(dima->second)
       << " != dim(Y) + codim(Y,Z) = " << p.dim_point(dima->first) << " + "
       << p.codim(dima->first, dima->second);
    add_witness("dim_additivity", os.str());
  }
  if (codima) {
    std::ostringstream os;
    os << "Y = " << p.point(codima->first)
       << ", Z = " << p.point(codima->second)
       << ": codim(Y,X) = " << p.codim_in_space(codima->first)
       << " != codim(Y,Z) + codim(Z,X) = "
       << p.codim(codima->first, codima->second) << " + "
       << p.codim_in_space(codima->second);
    add_witness("codim_additivity", os.str());
  }
  if (local_bad) {
    std::ostringstream os;
    if (local_bad_catenary) {
      os << "local poset at " << p.point(*local_bad) << " is not catenary";
    } else {
      os << "point " << p.point(*local_bad) << " has codimension "
         << p.codim(*local_bad, local_bad_pair->first) << " in component "
         << p.point(local_bad_pair->first) << " but "
         << p.codim(*local_bad, local_bad_pair->second) << " in component "
         << p.point(local_bad_pair->second);
    }
    add_witness("local_rings_catenary_equidimensional", os.str());
  }

  return r;
}

}  // namespace specpos

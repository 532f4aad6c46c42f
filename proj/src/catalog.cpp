#include "specpos/catalog.hpp"

#include <charconv>
#include <sstream>

#include "specpos/codim.hpp"

namespace specpos {

namespace {

CatalogExpectation all_true(int dimension) {
  CatalogExpectation e;
  e.dimension = dimension;
  e.equidimensional = true;
  e.equicodimensional = true;
  e.catenary = true;
  e.weakly_biequidimensional = true;
  e.biequidimensional = true;
  e.dimension_formula = true;
  e.dim_additivity = true;
  e.codim_additivity = true;
  e.local_rings_catenary_equidimensional = true;
  e.noetherian_obstruction_free = true;
  e.codim_function_exists = true;
  return e;
}

CatalogEntry butterfly(bool flagged) {
  std::vector<std::string> flags;
  if (flagged) flags = {"x3", "x4"};
  SpectralPoset poset = SpectralPoset::build(
      {"x1", "x2", "x3", "x4", "x5", "x6"},
      {{"x1", "x3"}, {"x3", "x5"}, {"x2", "x4"}, {"x4", "x6"}, {"x1", "x6"},
       {"x2", "x5"}},
      flags);
  CatalogExpectation e;
  e.dimension = 2;
  e.equidimensional = true;
  e.equicodimensional = true;
  e.catenary = true;
  e.weakly_biequidimensional = true;
  e.biequidimensional = false;       // maximal chain lengths 1 and 2
  e.dimension_formula = true;
  e.dim_additivity = false;          // dim(x6) = 2 but dim(x1) + codim = 1
  e.codim_additivity = false;
  e.local_rings_catenary_equidimensional = false;
  e.noetherian_obstruction_free = flagged;
  e.codim_function_exists = false;   // the crossed chains force d(x1) apart
  std::string provenance =
      flagged
          ? "two crossing saturated chains of lengths 1 and 2, with "
            "infinitely many height-one points on each straight chain; "
            "realizable as the spectrum of a Noetherian ring"
          : "six-point T0 space with two crossing saturated chains of "
            "lengths 1 and 2; weakly biequidimensional but not "
            "biequidimensional, and no codimension function exists";
  return CatalogEntry{flagged ? "NOETHERIAN_BUTTERFLY" : "BUTTERFLY",
                      std::move(poset), e, std::move(provenance)};
}

CatalogEntry glue() {
  SpectralPoset poset = SpectralPoset::build(
      {"(v,w,x,y-1)", "(v,w,y)", "(v,w,x)", "(w,y)", "(v,w)", "(y)"},
      {{"(v,w,x,y-1)", "(v,w,x)"},
       {"(v,w,x)", "(v,w)"},
       {"(v,w,y)", "(w,y)"},
       {"(w,y)", "(y)"},
       {"(v,w,y)", "(v,w)"}},
      {"(v,w,x)", "(w,y)"});
  CatalogExpectation e;
  e.dimension = 2;
  e.equidimensional = true;
  e.equicodimensional = true;
  e.catenary = true;
  e.weakly_biequidimensional = true;
  e.biequidimensional = false;
  e.dimension_formula = true;
  e.dim_additivity = false;
  e.codim_additivity = false;        // fails at Y=(v,w,y), Z=(v,w)
  e.local_rings_catenary_equidimensional = false;  // fails at (v,w,y)
  e.noetherian_obstruction_free = true;
  e.codim_function_exists = true;    // but candidate_codim is not one
  return CatalogEntry{
      "GLUE", std::move(poset), e,
      "Spec of k[v,w,x,y]/(vy,wy), a plane and a 3-space glued along a "
      "line, localized away from the union of (v,w,x,y-1) and (v,w,y)"};
}

CatalogEntry glue2() {
  SpectralPoset poset = SpectralPoset::build(
      {"(u,v,w,x,y-1,z-1)", "(u,v,w,x,y-1)", "(u,v,w,x)", "(u,v,w)",
       "(u,v,w,y,z)", "(v,w,y,z)", "(w,y,z)", "(y,z)", "(u,v,w,y)"},
      {{"(u,v,w,x,y-1,z-1)", "(u,v,w,x,y-1)"},
       {"(u,v,w,x,y-1)", "(u,v,w,x)"},
       {"(u,v,w,x)", "(u,v,w)"},
       {"(u,v,w,y,z)", "(v,w,y,z)"},
       {"(v,w,y,z)", "(w,y,z)"},
       {"(w,y,z)", "(y,z)"},
       {"(u,v,w,y,z)", "(u,v,w,y)"},
       {"(u,v,w,y)", "(u,v,w)"}},
      // The minimal flag set that clears every obstruction pair: all five
      // height-one and height-two mid-level points.
      {"(u,v,w,x,y-1)", "(u,v,w,x)", "(v,w,y,z)", "(w,y,z)", "(u,v,w,y)"});
  CatalogExpectation e;
  e.dimension = 3;
  e.equidimensional = true;
  e.equicodimensional = true;
  e.catenary = true;
  e.weakly_biequidimensional = true;
  e.biequidimensional = false;
  e.dimension_formula = false;       // (u,v,w,y): 1 + 1 = 2 < 3
  e.dim_additivity = false;
  e.codim_additivity = false;
  e.local_rings_catenary_equidimensional = false;
  e.noetherian_obstruction_free = true;
  e.codim_function_exists = true;
  return CatalogEntry{
      "GLUE2", std::move(poset), e,
      "Spec of k[u,v,w,x,y,z]/(uy,uz,vy,vz,wy,wz), a 3-space and a 4-space "
      "glued along a line, localized away from the union of (u,v,w,y,z) "
      "and (u,v,w,x,y-1,z-1); weakly biequidimensional but the dimension "
      "formula fails"};
}

CatalogEntry wx() {
  SpectralPoset poset = SpectralPoset::build(
      {"(u,v,w)", "(w,x)", "(x,y,z)", "(v,w)", "(x,y)", "(w)", "(x)"},
      {{"(u,v,w)", "(v,w)"},
       {"(v,w)", "(w)"},
       {"(w,x)", "(w)"},
       {"(w,x)", "(x)"},
       {"(x,y,z)", "(x,y)"},
       {"(x,y)", "(x)"}},
      {"(v,w)", "(x,y)"});
  CatalogExpectation e;
  e.dimension = 2;
  e.equidimensional = true;          // both components have dimension 2
  e.equicodimensional = false;       // (w,x) has codimension 1, the rest 2
  e.catenary = true;
  e.weakly_biequidimensional = false;
  e.biequidimensional = false;
  e.dimension_formula = false;
  e.dim_additivity = false;
  e.codim_additivity = true;
  e.local_rings_catenary_equidimensional = true;
  e.noetherian_obstruction_free = true;
  e.codim_function_exists = true;
  return CatalogEntry{
      "WX", std::move(poset), e,
      "two 2-dimensional irreducible components meeting in a single point "
      "of codimension 1 (the (w,x)-point); every local poset is catenary "
      "and equidimensional, yet the space is not biequidimensional"};
}

CatalogEntry chain(int k) {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i <= k; ++i) points.push_back("c" + std::to_string(i));
  for (int i = 0; i < k; ++i) covers.emplace_back(points[i], points[i + 1]);
  CatalogExpectation e = all_true(k);
  // A finite chain of dimension >= 2 has a height-two pair with a single
  // intermediate point, which no Noetherian ring realizes.
  e.noetherian_obstruction_free = k <= 1;
  return CatalogEntry{"CHAIN_" + std::to_string(k),
                      SpectralPoset::build(points, covers), e,
                      "a single saturated chain c0 < ... < c" +
                          std::to_string(k) + " of dimension " +
                          std::to_string(k)};
}

CatalogEntry antichain(int k) {
  std::vector<std::string> points;
  for (int i = 1; i <= k; ++i) points.push_back("a" + std::to_string(i));
  return CatalogEntry{"ANTICHAIN_" + std::to_string(k),
                      SpectralPoset::build(points, {}), all_true(0),
                      std::to_string(k) + " pairwise incomparable points"};
}

std::optional<int> parse_parameter(const std::string& name,
                                   const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix)) {
    return std::nullopt;
  }
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) return std::nullopt;
  return value;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
  if (name == "BUTTERFLY") return butterfly(false);
  if (name == "NOETHERIAN_BUTTERFLY") return butterfly(true);
  if (name == "GLUE") return glue();
  if (name == "GLUE2") return glue2();
  if (name == "WX") return wx();
  if (auto k = parse_parameter(name, "CHAIN_")) return chain(*k);
  if (auto k = parse_parameter(name, "ANTICHAIN_")) {
    if (*k >= 1) return antichain(*k);
  }
  throw UnknownNameError("no catalog fixture named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"BUTTERFLY", "NOETHERIAN_BUTTERFLY", "GLUE", "GLUE2", "WX",
          "CHAIN_1", "CHAIN_2", "CHAIN_3", "ANTICHAIN_2", "ANTICHAIN_3"};
}

CatalogVerification catalog_verify_all() {
  CatalogVerification result;
  auto check = [&result](const std::string& entry, const std::string& field,
                         const auto& expected, const auto& actual) {
    if (expected == actual) return;
    std::ostringstream want, got;
    want << expected;
    got << actual;
    result.mismatches.push_back(
        CatalogMismatch{entry, field, want.str(), got.str()});
  };

  for (const auto& name : catalog_names()) {
    CatalogEntry entry = catalog_get(name);
    AnalysisReport r = classify(entry.poset);
    const CatalogExpectation& e = entry.expected;
    check(name, "dimension", e.dimension, r.dimension);
    check(name, "equidimensional", e.equidimensional, r.equidimensional);
    check(name, "equicodimensional", e.equicodimensional,
          r.equicodimensional);
    check(name, "catenary", e.catenary, r.catenary);
    check(name, "weakly_biequidimensional", e.weakly_biequidimensional,
          r.weakly_biequidimensional);
    check(name, "biequidimensional", e.biequidimensional,
          r.biequidimensional);
    check(name, "dimension_formula", e.dimension_formula,
          r.dimension_formula);
    check(name, "dim_additivity", e.dim_additivity, r.dim_additivity);
    check(name, "codim_additivity", e.codim_additivity, r.codim_additivity);
    check(name, "local_rings_catenary_equidimensional",
          e.local_rings_catenary_equidimensional,
          r.local_rings_catenary_equidimensional);
    check(name, "noetherian_obstruction_free", e.noetherian_obstruction_free,
          r.noetherian_violations.empty());
    check(name, "codim_function_exists", e.codim_function_exists,
          has_assignment(solve_codim_function(entry.poset)));
  }
  result.ok = result.mismatches.empty();
  return result;
}

}  // namespace specpos

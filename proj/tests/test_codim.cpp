#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "specpos/catalog.hpp"
#include "specpos/codim.hpp"
#include "specpos/errors.hpp"
#include "specpos/poset.hpp"

using specpos::CodimAssignment;
using specpos::CodimCertificate;
using specpos::CodimResult;
using specpos::SpectralPoset;

namespace {

SpectralPoset fixture(const std::string& name) {
  return specpos::catalog_get(name).poset;
}

// Definitional validity of a certificate: a closed walk over covers whose
// signed length (down +1, up -1) is nonzero.
void check_certificate(const SpectralPoset& p, const CodimCertificate& cert) {
  REQUIRE(cert.walk.size() >= 4);
  CHECK(cert.walk.front() == cert.walk.back());
  int sum = 0;
  for (size_t k = 0; k + 1 < cert.walk.size(); ++k) {
    int a = p.index_of(cert.walk[k]);
    int b = p.index_of(cert.walk[k + 1]);
    bool down_step = false;
    bool up_step = false;
    for (const auto& [lo, hi] : p.covers()) {
      if (lo == b && hi == a) down_step = true;
      if (lo == a && hi == b) up_step = true;
    }
    REQUIRE(down_step != up_step);
    sum += down_step ? 1 : -1;
  }
  CHECK(sum == cert.signed_length);
  CHECK(sum != 0);
}

}  // namespace

TEST_CASE("chains and antichains have the obvious codimension functions") {
  SpectralPoset chain = fixture("CHAIN_3");
  CodimResult r = specpos::solve_codim_function(chain);
  REQUIRE(specpos::has_assignment(r));
  CHECK(std::get<CodimAssignment>(r).values ==
        std::map<std::string, int>{{"c0", 3}, {"c1", 2}, {"c2", 1},
                                   {"c3", 0}});

  SpectralPoset anti = fixture("ANTICHAIN_3");
  CodimResult ra = specpos::solve_codim_function(anti);
  REQUIRE(specpos::has_assignment(ra));
  // Each component is anchored at zero separately.
  CHECK(std::get<CodimAssignment>(ra).values ==
        std::map<std::string, int>{{"a1", 0}, {"a2", 0}, {"a3", 0}});
}

TEST_CASE("the crossed chains admit no codimension function") {
  SpectralPoset p = fixture("BUTTERFLY");
  CodimResult r = specpos::solve_codim_function(p);
  REQUIRE(!specpos::has_assignment(r));
  const auto& cert = std::get<CodimCertificate>(r);
  check_certificate(p, cert);
  CHECK(cert.walk ==
        std::vector<std::string>{"x1", "x6", "x4", "x2", "x5", "x3", "x1"});
  CHECK(cert.signed_length == 2);
}

TEST_CASE("glued spaces have codimension functions, anchored per component") {
  SpectralPoset glue = fixture("GLUE");
  CodimResult r = specpos::solve_codim_function(glue);
  REQUIRE(specpos::has_assignment(r));
  const auto& values = std::get<CodimAssignment>(r).values;
  CHECK(values == std::map<std::string, int>{{"(v,w,x,y-1)", 3},
                                             {"(v,w,y)", 2},
                                             {"(v,w,x)", 2},
                                             {"(w,y)", 1},
                                             {"(v,w)", 1},
                                             {"(y)", 0}});
  CHECK(specpos::is_codim_function(glue, values));

  SpectralPoset glue2 = fixture("GLUE2");
  CodimResult r2 = specpos::solve_codim_function(glue2);
  REQUIRE(specpos::has_assignment(r2));
  const auto& v2 = std::get<CodimAssignment>(r2).values;
  CHECK(v2 == std::map<std::string, int>{{"(u,v,w,x,y-1,z-1)", 4},
                                         {"(u,v,w,x,y-1)", 3},
                                         {"(u,v,w,x)", 2},
                                         {"(u,v,w)", 1},
                                         {"(u,v,w,y,z)", 3},
                                         {"(v,w,y,z)", 2},
                                         {"(w,y,z)", 1},
                                         {"(y,z)", 0},
                                         {"(u,v,w,y)", 2}});
  CHECK(specpos::is_codim_function(glue2, v2));
}

TEST_CASE("is_codim_function checks the cover condition") {
  SpectralPoset chain = fixture("CHAIN_2");
  CHECK(specpos::is_codim_function(
      chain, {{"c0", 2}, {"c1", 1}, {"c2", 0}}));
  // Shifting a whole component keeps validity.
  CHECK(specpos::is_codim_function(
      chain, {{"c0", 7}, {"c1", 6}, {"c2", 5}}));
  CHECK(!specpos::is_codim_function(
      chain, {{"c0", 2}, {"c1", 0}, {"c2", 0}}));
  CHECK_THROWS_AS(specpos::is_codim_function(chain, {{"c0", 2}}),
                  specpos::MissingValueError);
}

TEST_CASE("candidate functions") {
  // On the glued space codim_in_space is not a codimension function even
  // though one exists.
  SpectralPoset glue = fixture("GLUE");
  CHECK(!specpos::is_codim_function(glue, specpos::candidate_codim(glue)));
  CHECK(specpos::has_assignment(specpos::solve_codim_function(glue)));
  CHECK(!specpos::all_local_posets_catenary_equidimensional(glue));

  // Negated dimension works on chains but fails on the glued space.
  SpectralPoset chain = fixture("CHAIN_3");
  CHECK(specpos::is_codim_function(chain, specpos::candidate_neg_dim(chain)));
  CHECK(!specpos::is_codim_function(glue, specpos::candidate_neg_dim(glue)));

  // Where every local poset is catenary and equidimensional, the
  // candidate is valid.
  SpectralPoset wx = fixture("WX");
  CHECK(specpos::all_local_posets_catenary_equidimensional(wx));
  CHECK(specpos::is_codim_function(wx, specpos::candidate_codim(wx)));
}

TEST_CASE("solver agrees with the simple-cycle oracle") {
  std::mt19937 rng(5051986);
  for (int trial = 0; trial < 500; ++trial) {
    SpectralPoset p = oracle::random_poset(rng, 8);
    INFO("trial " << trial << ", " << p.size() << " points");
    CodimResult r = specpos::solve_codim_function(p);
    CHECK(specpos::has_assignment(r) ==
          oracle::codim_function_exists_oracle(p));
    if (specpos::has_assignment(r)) {
      const auto& values = std::get<CodimAssignment>(r).values;
      CHECK(specpos::is_codim_function(p, values));
      // Every weakly connected part is anchored at zero.
      int global_min = p.size();
      for (const auto& [name, value] : values) {
        CHECK(value >= 0);
        global_min = std::min(global_min, value);
      }
      CHECK(global_min == 0);
    } else {
      check_certificate(p, std::get<CodimCertificate>(r));
    }

    CHECK(specpos::all_local_posets_catenary_equidimensional(p) ==
          specpos::is_codim_function(p, specpos::candidate_codim(p)));
  }
}

TEST_CASE("certificates start at their least point name") {
  SpectralPoset p = fixture("BUTTERFLY");
  auto r = specpos::solve_codim_function(p);
  const auto& cert = std::get<CodimCertificate>(r);
  for (const std::string& name : cert.walk) {
    CHECK(cert.walk.front() <= name);
  }
}

TEST_CASE("a certificate rules out every bounded labeling") {
  // Shift invariance lets us pin one point's value at 0; every valid
  // function then stays within the longest cover-path distance of 0, so a
  // bounded scan over the remaining points is exhaustive.
  auto no_bounded_function = [](const SpectralPoset& p, int bound) {
    const int n = p.size();
    std::vector<int> value(n, -bound);
    value[0] = 0;
    std::map<std::string, int> d;
    while (true) {
      d.clear();
      for (int i = 0; i < n; ++i) d[p.point(i)] = value[i];
      if (specpos::is_codim_function(p, d)) return false;
      int k = 1;
      while (k < n && value[k] == bound) value[k++] = -bound;
      if (k == n) return true;
      ++value[k];
    }
  };

  SpectralPoset butterfly = fixture("BUTTERFLY");
  REQUIRE(!specpos::has_assignment(specpos::solve_codim_function(butterfly)));
  CHECK(no_bounded_function(butterfly, 6));

  // Five-point zigzag ring: the smallest space without a codimension
  // function, since its one Hasse cycle has signed length 1.
  SpectralPoset fence = SpectralPoset::build(
      {"q1", "p1", "q2", "p2", "t"},
      {{"q1", "p1"}, {"q2", "p1"}, {"q2", "p2"}, {"t", "p2"}, {"q1", "t"}});
  REQUIRE(!specpos::has_assignment(specpos::solve_codim_function(fence)));
  CHECK(no_bounded_function(fence, 5));
}

TEST_CASE("valid labelings differ from the anchored solution by a constant") {
  SpectralPoset glue = fixture("GLUE");
  CodimResult solved = specpos::solve_codim_function(glue);
  REQUIRE(specpos::has_assignment(solved));
  const auto& anchored = std::get<CodimAssignment>(solved).values;

  const int bound = 4;
  const int n = glue.size();
  std::vector<int> value(n, -bound);
  std::map<std::string, int> d;
  int valid_count = 0;
  while (true) {
    d.clear();
    for (int i = 0; i < n; ++i) d[glue.point(i)] = value[i];
    if (specpos::is_codim_function(glue, d)) {
      ++valid_count;
      int shift = d.at(glue.point(0)) - anchored.at(glue.point(0));
      for (int i = 0; i < n; ++i) {
        CHECK(d.at(glue.point(i)) == anchored.at(glue.point(i)) + shift);
      }
    }
    int k = 0;
    while (k < n && value[k] == bound) value[k++] = -bound;
    if (k == n) break;
    ++value[k];
  }
  // The anchored values span 0..3, so exactly the shifts keeping them
  // inside [-4, 4] appear: -4 through +1.
  CHECK(valid_count == 6);
}

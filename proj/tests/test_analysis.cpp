#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "specpos/analysis.hpp"
#include "specpos/catalog.hpp"
#include "specpos/poset.hpp"

using specpos::AnalysisReport;
using specpos::SpectralPoset;
using specpos::Witness;

namespace {

SpectralPoset fixture(const std::string& name) {
  return specpos::catalog_get(name).poset;
}

const Witness* find_witness(const AnalysisReport& r,
                            const std::string& property) {
  for (const Witness& w : r.witnesses) {
    if (w.property == property) return &w;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("single chains and antichains satisfy everything") {
  for (const std::string name : {"CHAIN_0", "CHAIN_3", "ANTICHAIN_1",
                                 "ANTICHAIN_3"}) {
    SpectralPoset p = fixture(name);
    INFO(name);
    AnalysisReport r = specpos::classify(p);
    CHECK(r.equidimensional);
    CHECK(r.equicodimensional);
    CHECK(r.catenary);
    CHECK(r.weakly_biequidimensional);
    CHECK(r.biequidimensional);
    CHECK(r.dimension_formula);
    CHECK(r.dim_additivity);
    CHECK(r.codim_additivity);
    CHECK(r.local_rings_catenary_equidimensional);
    CHECK(r.witnesses.empty());
  }
  CHECK(specpos::classify(fixture("CHAIN_3")).dimension == 3);
  CHECK(specpos::classify(fixture("ANTICHAIN_3")).dimension == 0);
}

TEST_CASE("one generic point over two closed points") {
  SpectralPoset v = SpectralPoset::build({"a", "b", "c"},
                                         {{"a", "c"}, {"b", "c"}});
  CHECK(specpos::is_biequidimensional(v));
  CHECK(specpos::is_equicodimensional(v));
  CHECK(specpos::classify(v).dimension == 1);

  SpectralPoset roof = SpectralPoset::build({"a", "b", "c"},
                                            {{"a", "b"}, {"a", "c"}});
  CHECK(specpos::is_biequidimensional(roof));
  CHECK(specpos::is_equidimensional(roof));
}

TEST_CASE("a dangling closed point breaks equicodimensionality") {
  // b sits directly under the generic point of a 2-chain.
  SpectralPoset p = SpectralPoset::build(
      {"a", "b", "m", "t"}, {{"a", "m"}, {"m", "t"}, {"b", "t"}});
  CHECK(specpos::is_equidimensional(p));
  CHECK(!specpos::is_equicodimensional(p));
  CHECK(specpos::is_catenary(p));
  CHECK(!specpos::is_weakly_biequidimensional(p));
  CHECK(!specpos::is_biequidimensional(p));

  AnalysisReport r = specpos::classify(p);
  const Witness* w = find_witness(r, "equicodimensional");
  REQUIRE(w != nullptr);
  CHECK(w->detail ==
        "closed points a (codimension 2) and b (codimension 1)");
  const Witness* weak = find_witness(r, "weakly_biequidimensional");
  REQUIRE(weak != nullptr);
  CHECK(weak->detail == "not equicodimensional");
}

TEST_CASE("a non-catenary interval is detected with both chains") {
  // Two saturated chains a -> t of lengths 2 and 3.
  SpectralPoset p = SpectralPoset::build(
      {"a", "b1", "b2", "c1", "t"},
      {{"a", "b1"}, {"b1", "b2"}, {"b2", "t"}, {"a", "c1"}, {"c1", "t"}});
  CHECK(!specpos::is_catenary(p));
  AnalysisReport r = specpos::classify(p);
  const Witness* w = find_witness(r, "catenary");
  REQUIRE(w != nullptr);
  CHECK(w->detail ==
        "saturated chains a < c1 < t (length 2) and a < b1 < b2 < t "
        "(length 3)");
}

TEST_CASE("crossed chains: weakly biequidimensional but not "
          "biequidimensional") {
  SpectralPoset p = fixture("BUTTERFLY");
  AnalysisReport r = specpos::classify(p);

  CHECK(r.n_points == 6);
  CHECK(r.dimension == 2);
  CHECK(r.equidimensional);
  CHECK(r.equicodimensional);
  CHECK(r.catenary);
  CHECK(r.weakly_biequidimensional);
  CHECK(!r.biequidimensional);
  CHECK(r.dimension_formula);
  CHECK(!r.dim_additivity);
  CHECK(!r.codim_additivity);
  CHECK(!r.local_rings_catenary_equidimensional);

  const Witness* bieq = find_witness(r, "biequidimensional");
  REQUIRE(bieq != nullptr);
  CHECK(bieq->detail ==
        "maximal chains x1 < x3 < x5 (length 2) and x1 < x6 (length 1)");

  const Witness* dima = find_witness(r, "dim_additivity");
  REQUIRE(dima != nullptr);
  CHECK(dima->detail ==
        "Y = x1, Z = x6: dim(Z) = 2 != dim(Y) + codim(Y,Z) = 0 + 1");

  const Witness* codima = find_witness(r, "codim_additivity");
  REQUIRE(codima != nullptr);
  CHECK(codima->detail ==
        "Y = x1, Z = x6: codim(Y,X) = 2 != codim(Y,Z) + codim(Z,X) = 1 + 0");

  const Witness* local = find_witness(r, "local_rings_catenary_equidimensional");
  REQUIRE(local != nullptr);
  CHECK(local->detail ==
        "point x1 has codimension 2 in component x5 but 1 in component x6");

  CHECK(find_witness(r, "equidimensional") == nullptr);
  CHECK(find_witness(r, "dimension_formula") == nullptr);
}

TEST_CASE("glued components keep the dimension formula but lose "
          "additivity") {
  SpectralPoset p = fixture("GLUE");
  AnalysisReport r = specpos::classify(p);
  CHECK(r.dimension == 2);
  CHECK(r.weakly_biequidimensional);
  CHECK(!r.biequidimensional);
  CHECK(r.dimension_formula);
  CHECK(!r.dim_additivity);
  CHECK(!r.codim_additivity);
  CHECK(!r.local_rings_catenary_equidimensional);

  const Witness* bieq = find_witness(r, "biequidimensional");
  REQUIRE(bieq != nullptr);
  CHECK(bieq->detail ==
        "maximal chains (v,w,x,y-1) < (v,w,x) < (v,w) (length 2) and "
        "(v,w,y) < (v,w) (length 1)");

  const Witness* local = find_witness(r, "local_rings_catenary_equidimensional");
  REQUIRE(local != nullptr);
  CHECK(local->detail ==
        "point (v,w,y) has codimension 1 in component (v,w) but 2 in "
        "component (y)");
}

TEST_CASE("higher-dimensional gluing breaks the dimension formula") {
  SpectralPoset p = fixture("GLUE2");
  AnalysisReport r = specpos::classify(p);
  CHECK(r.dimension == 3);
  CHECK(r.weakly_biequidimensional);
  CHECK(!r.biequidimensional);
  CHECK(!r.dimension_formula);

  const Witness* dimf = find_witness(r, "dimension_formula");
  REQUIRE(dimf != nullptr);
  CHECK(dimf->detail ==
        "point (u,v,w,y): dim 1 + codim 1 = 2 != dim(X) = 3");

  const Witness* dima = find_witness(r, "dim_additivity");
  REQUIRE(dima != nullptr);
  CHECK(dima->detail ==
        "Y = (u,v,w,y,z), Z = (u,v,w): dim(Z) = 3 != dim(Y) + codim(Y,Z) = "
        "0 + 2");

  const Witness* codima = find_witness(r, "codim_additivity");
  REQUIRE(codima != nullptr);
  CHECK(codima->detail ==
        "Y = (u,v,w,y,z), Z = (u,v,w): codim(Y,X) = 3 != codim(Y,Z) + "
        "codim(Z,X) = 2 + 0");
}

TEST_CASE("local posets can all be good while the space is not "
          "biequidimensional") {
  SpectralPoset p = fixture("WX");
  AnalysisReport r = specpos::classify(p);
  CHECK(r.dimension == 2);
  CHECK(r.equidimensional);
  CHECK(!r.equicodimensional);
  CHECK(r.catenary);
  CHECK(!r.weakly_biequidimensional);
  CHECK(!r.biequidimensional);
  CHECK(!r.dimension_formula);
  CHECK(!r.dim_additivity);
  CHECK(r.codim_additivity);
  CHECK(r.local_rings_catenary_equidimensional);

  const Witness* eqc = find_witness(r, "equicodimensional");
  REQUIRE(eqc != nullptr);
  CHECK(eqc->detail ==
        "closed points (u,v,w) (codimension 2) and (w,x) (codimension 1)");
  const Witness* dimf = find_witness(r, "dimension_formula");
  REQUIRE(dimf != nullptr);
  CHECK(dimf->detail == "point (w,x): dim 0 + codim 1 = 1 != dim(X) = 2");
}

TEST_CASE("local posets") {
  SpectralPoset p = fixture("BUTTERFLY");
  SpectralPoset at_x1 = specpos::local_poset(p, "x1");
  CHECK(at_x1.points() == std::vector<std::string>{"x1", "x3", "x5", "x6"});
  CHECK(specpos::local_is_catenary(p, "x1"));
  CHECK(!specpos::local_is_equidimensional(p, "x1"));
  CHECK(specpos::local_is_equidimensional(p, "x3"));
  CHECK(specpos::local_is_catenary(p, "x5"));

  SpectralPoset wx = fixture("WX");
  for (const std::string& x : wx.points()) {
    CHECK(specpos::local_is_catenary(wx, x));
    CHECK(specpos::local_is_equidimensional(wx, x));
  }
}

TEST_CASE("the closed-point criterion is exactly biequidimensionality") {
  std::mt19937 rng(7041992);
  for (int trial = 0; trial < 400; ++trial) {
    SpectralPoset p = oracle::random_poset(rng, 7);
    INFO("trial " << trial);
    CHECK(specpos::closed_point_local_criterion(p) ==
          oracle::biequidimensional_oracle(p));
    CHECK(specpos::is_biequidimensional(p) ==
          oracle::biequidimensional_oracle(p));
    CHECK(specpos::is_catenary(p) == oracle::catenary_oracle(p));
  }
}

TEST_CASE("obstructions to realizability over a Noetherian ring") {
  SpectralPoset butterfly = fixture("BUTTERFLY");
  auto pairs = specpos::noetherian_obstructions(butterfly);
  CHECK(pairs == std::vector<std::pair<std::string, std::string>>{
                     {"x1", "x5"}, {"x2", "x6"}});

  CHECK(specpos::noetherian_obstructions(fixture("NOETHERIAN_BUTTERFLY"))
            .empty());
  CHECK(specpos::noetherian_obstructions(fixture("GLUE")).empty());
  CHECK(specpos::noetherian_obstructions(fixture("GLUE2")).empty());
  CHECK(specpos::noetherian_obstructions(fixture("WX")).empty());
  CHECK(specpos::noetherian_obstructions(fixture("CHAIN_1")).empty());
  CHECK(specpos::noetherian_obstructions(fixture("CHAIN_2")) ==
        std::vector<std::pair<std::string, std::string>>{{"c0", "c2"}});

  // Flagging the midpoint of a 2-chain clears its obstruction; flagging an
  // endpoint does not.
  SpectralPoset chain2 = fixture("CHAIN_2");
  CHECK(specpos::noetherian_obstructions(chain2.with_infinite_flags({"c1"}))
            .empty());
  CHECK(!specpos::noetherian_obstructions(chain2.with_infinite_flags({"c0"}))
             .empty());

  // The flag set of the higher glued space is minimal: removing any single
  // flag re-introduces an obstruction.
  SpectralPoset glue2 = fixture("GLUE2");
  std::vector<std::string> flags = glue2.infinite_points();
  CHECK(flags.size() == 5);
  for (size_t skip = 0; skip < flags.size(); ++skip) {
    std::vector<std::string> fewer;
    for (size_t k = 0; k < flags.size(); ++k) {
      if (k != skip) fewer.push_back(flags[k]);
    }
    CHECK(!specpos::noetherian_obstructions(glue2.with_infinite_flags(fewer))
               .empty());
  }
}

TEST_CASE("flags change nothing but the obstruction list") {
  AnalysisReport plain = specpos::classify(fixture("BUTTERFLY"));
  AnalysisReport flagged = specpos::classify(fixture("NOETHERIAN_BUTTERFLY"));
  CHECK(plain.noetherian_violations.size() == 2);
  CHECK(flagged.noetherian_violations.empty());
  flagged.noetherian_violations = plain.noetherian_violations;
  CHECK(plain == flagged);
}

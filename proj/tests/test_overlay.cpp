#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcc/overlay.hpp"

using namespace surfcc;

static CurveDiagram must_embed(const SurfacePtr& s, const Word& w) {
  auto d = embed_word(s, w);
  REQUIRE(d.has_value());
  return *d;
}

TEST_CASE("bare arrangements reproduce the surface") {
  for (int g = 1; g <= 3; ++g) {
    SurfacePtr s = standard_surface(g);
    Overlay o = Overlay::sequential(s, {});
    CHECK_NOTHROW(o.validate());
    CHECK(o.num_arrangement_faces() == s->num_faces());
  }
}

TEST_CASE("dual pair on the torus: one crossing, four arrangement faces") {
  SurfacePtr s = standard_surface(1);
  Overlay o = Overlay::sequential(s, {edge_dual(s, 0), edge_dual(s, 1)});
  CHECK(o.count_pair(0, 1) == 1);
  CHECK(o.isects()[0].sign == +1);
  CHECK_NOTHROW(o.validate());
  CHECK(o.num_arrangement_faces() == 4);
}

TEST_CASE("sign calibration: <a*, b*> = +1") {
  for (int g : {1, 2, 3}) {
    SurfacePtr s = standard_surface(g);
    CHECK(algebraic_intersection(edge_dual(s, 0), edge_dual(s, 1)) == +1);
    CHECK(algebraic_intersection(edge_dual(s, 1), edge_dual(s, 0)) == -1);
  }
}

TEST_CASE("torus intersection numbers are determinants") {
  SurfacePtr s = standard_surface(1);
  ContractOracle oracle = ContractOracle::for_base(s);
  CurveDiagram c10 = edge_dual(s, 0);           // class (1, 0)
  CurveDiagram c01 = edge_dual(s, 1);           // class (0, 1)
  CurveDiagram c11 = must_embed(s, {1, 2});     // class (1, 1)
  CurveDiagram c21 = must_embed(s, {1, 1, 2});  // class (2, 1)
  auto det = [](const CurveDiagram& u, const CurveDiagram& v) {
    auto a = u.signed_edge_vector(), b = v.signed_edge_vector();
    return a[0] * b[1] - a[1] * b[0];
  };
  for (const auto* u : {&c10, &c01, &c11, &c21})
    for (const auto* v : {&c10, &c01, &c11, &c21}) {
      CHECK(algebraic_intersection(*u, *v) == det(*u, *v));
      CHECK(geometric_intersection(*u, *v, oracle) == std::abs(det(*u, *v)));
    }
}

TEST_CASE("bigon reduction on a wandering torus representative") {
  SurfacePtr s = standard_surface(1);
  ContractOracle oracle = ContractOracle::for_base(s);
  // A meandering (3,2) representative against the duals.
  CurveDiagram d = must_embed(s, {1, 2, 1, -1, 1, 2, 1});
  CHECK(geometric_intersection(d, edge_dual(s, 0), oracle) == 2);
  CHECK(geometric_intersection(d, edge_dual(s, 1), oracle) == 3);
  CHECK(algebraic_intersection(d, edge_dual(s, 0)) == -2);  // <(3,2),(1,0)> = -2
}

TEST_CASE("hand-built bigon between a dual and a spurred curve") {
  SurfacePtr s = standard_surface(2);
  ContractOracle oracle = ContractOracle::for_base(s);
  CurveDiagram alpha = edge_dual(s, 0);  // a1 dual
  // Isotopic to the a2 dual but with a detour across a1 and back.
  CurveDiagram delta =
      diagram_from_ranks(s, {{2, +1}, {0, +1}, {0, -1}}, {0, 0, 1});
  REQUIRE(diagram_interleavings(delta) == 0);
  // Joint position with alpha's a1 point between delta's two: forces an
  // inessential crossing pair.
  std::vector<std::vector<MergedPoint>> merged(s->num_edges());
  merged[0] = {{1, 1}, {0, 0}, {1, 2}};
  merged[2] = {{1, 0}};
  Overlay o(s, {alpha, delta}, merged);
  CHECK(o.count_pair(0, 1) == 2);
  CHECK(o.signed_sum(0, 1) == 0);
  CHECK_NOTHROW(o.validate());
  Overlay r = reduce_pair_bigons(o, 0, 1, oracle);
  CHECK(r.count_pair(0, 1) == 0);
  CHECK_NOTHROW(r.validate());
  // The rerouted curve keeps its homology class.
  CHECK(r.curve(0).signed_edge_vector() == alpha.signed_edge_vector());
  // Reduction works no matter which curve gets rerouted.
  CHECK(reduce_pair_bigons(o, 1, 0, oracle).count_pair(0, 1) == 0);
}

TEST_CASE("geometric intersection numbers on genus 2") {
  SurfacePtr s = standard_surface(2);
  ContractOracle oracle = ContractOracle::for_base(s);
  CurveDiagram a1 = edge_dual(s, 0), b1 = edge_dual(s, 1);
  CurveDiagram a2 = edge_dual(s, 2), b2 = edge_dual(s, 3);
  CHECK(geometric_intersection(a1, b1, oracle) == 1);
  CHECK(geometric_intersection(a1, a2, oracle) == 0);
  CHECK(geometric_intersection(b1, b2, oracle) == 0);
  CHECK(geometric_intersection(a1, a1, oracle) == 0);  // parallel copies
  // Symmetry and |algebraic| <= geometric on a handful of classes.
  std::vector<CurveDiagram> curves = {a1, b1, a2, b2, must_embed(s, {1, 2, 3}),
                                      must_embed(s, {2, 4})};
  for (const auto& u : curves)
    for (const auto& v : curves) {
      int ij = geometric_intersection(u, v, oracle);
      CHECK(ij == geometric_intersection(v, u, oracle));
      CHECK(std::abs(algebraic_intersection(u, v)) <= ij);
    }
}

TEST_CASE("itineraries on the torus") {
  SurfacePtr s = standard_surface(1);
  CurveDiagram a = edge_dual(s, 0), b = edge_dual(s, 1);
  CurveDiagram g = must_embed(s, {1, 2});
  Overlay o = Overlay::sequential(s, {a, b, g});
  SUBCASE("cutting along one dual leaves a cylinder") {
    auto it = o.itinerary(1, {0});
    CHECK(it.num_regions == 1);
    REQUIRE(it.steps.size() == 1);
    CHECK(it.steps[0].cut == 0);
    CHECK(it.steps[0].sign == +1);  // frame (a*, b*) is positive
    CHECK(it.cut_sides[0] == std::pair<int, int>(0, 0));
  }
  SUBCASE("cutting along both duals leaves a disk") {
    auto it = o.itinerary(2, {0, 1});
    CHECK(it.num_regions == 1);
    CHECK(it.steps.size() == 2);
  }
  SUBCASE("the probe may not be a cut") {
    CHECK_THROWS_AS(o.itinerary(0, {0, 1}), PreconditionError);
  }
}

TEST_CASE("a separating curve cuts genus 2 into two regions") {
  SurfacePtr s = standard_surface(2);
  ContractOracle oracle = ContractOracle::for_base(s);
  CurveDiagram sigma = must_embed(s, {1, 2, -1, -2});
  Overlay o = Overlay::sequential(s, {sigma, edge_dual(s, 2)});
  o = reduce_all_bigons(o, oracle);
  CHECK(o.count_pair(0, 1) == 0);
  auto it = o.itinerary(1, {0});
  CHECK(it.num_regions == 2);
  CHECK(it.steps.empty());
  // The two sides of a separating curve are different regions.
  CHECK(it.cut_sides[0].first != it.cut_sides[0].second);
}

TEST_CASE("homology classes") {
  SurfacePtr s = standard_surface(2);
  CurveDiagram d = must_embed(s, {1, 2, 3});
  CHECK(homology_class(d) == std::vector<long long>({1, 1, 1, 0}));
}

TEST_CASE("self-intersection numbers") {
  SurfacePtr s1 = standard_surface(1);
  ContractOracle o1 = ContractOracle::for_base(s1);
  CHECK(self_intersection(edge_dual(s1, 0), o1) == 0);
  CHECK(self_intersection(must_embed(s1, {1, 1, 2}), o1) == 0);
  // (2,2) = twice a simple class: minimal self-intersection 1.
  CurveDiagram dbl = diagram_from_ranks(s1, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}, {0, 0, 1, 1});
  CHECK(self_intersection(dbl, o1) == 1);

  SurfacePtr s2 = standard_surface(2);
  ContractOracle o2 = ContractOracle::for_base(s2);
  // a1^2 doubles the a1 dual.
  CurveDiagram sq = diagram_from_ranks(s2, {{0, 1}, {0, 1}}, {0, 1});
  CHECK(self_intersection(sq, o2) == 1);
}

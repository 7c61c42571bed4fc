#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcc/twist.hpp"

using namespace surfcc;

static CurveDiagram must_embed(const SurfacePtr& s, const Word& w) {
  auto d = embed_word(s, w);
  REQUIRE(d.has_value());
  return *d;
}

// Oriented free-homotopy invariant; equal canonicals mean isotopic
// curves (the curves here are simple).
static Word canon(const DualPresentation& pres, const CurveDiagram& c) {
  return pres.conjugacy_canonical(c.crossing_word(), false);
}

static std::vector<long long> expected_class(const CurveDiagram& a, const CurveDiagram& b,
                                             int n) {
  auto ha = homology_class(a), hb = homology_class(b);
  long long ab = algebraic_intersection(a, b);
  for (size_t e = 0; e < ha.size(); ++e) ha[e] += n * ab * hb[e];
  return ha;
}

TEST_CASE("zero power and disjoint twisters act trivially") {
  SurfacePtr s = standard_surface(2);
  ContractOracle oracle = ContractOracle::for_base(s);
  DualPresentation pres(*s);
  CurveDiagram a1 = edge_dual(s, 0), a2 = edge_dual(s, 2);
  CHECK(dehn_twist(a1, a2, 0, oracle) == normalize(a1));
  // i(a1, a2) = 0: any power of the twist fixes the curve.
  CHECK(canon(pres, dehn_twist(a1, a2, 5, oracle)) == canon(pres, a1));
  CHECK(canon(pres, dehn_twist(a1, a1, 3, oracle)) == canon(pres, a1));
  CHECK(apply_twist_word({}, a1, oracle) == normalize(a1));
}

TEST_CASE("torus twists: homology and intersection formulas") {
  SurfacePtr s = standard_surface(1);
  ContractOracle oracle = ContractOracle::for_base(s);
  CurveDiagram a = edge_dual(s, 0);  // class (1, 0)
  CurveDiagram b = edge_dual(s, 1);  // class (0, 1)
  for (int n = -2; n <= 2; ++n) {
    CurveDiagram tn = dehn_twist(a, b, n, oracle);
    CHECK(homology_class(tn) == expected_class(a, b, n));
    CHECK(homology_class(tn) == std::vector<long long>({1, n}));
    // i(T^n(alpha), alpha) = |n| * i(alpha, beta)^2 with i = 1.
    CHECK(geometric_intersection(tn, a, oracle) == std::abs(n));
    CHECK(algebraic_intersection(tn, a) == -n);
  }
  // The same formulas with the roles swapped.
  for (int n = -2; n <= 2; ++n) {
    CurveDiagram tn = dehn_twist(b, a, n, oracle);
    CHECK(homology_class(tn) == expected_class(b, a, n));
    CHECK(geometric_intersection(tn, b, oracle) == std::abs(n));
  }
}

TEST_CASE("genus-2 twist with geometric intersection two") {
  SurfacePtr s = standard_surface(2);
  ContractOracle oracle = ContractOracle::for_base(s);
  // Classes b1 + b2 and a1 + a2 meet twice, with the same sign.
  CurveDiagram alpha = must_embed(s, {2, 4});
  CurveDiagram beta = must_embed(s, {1, 3});
  REQUIRE(geometric_intersection(alpha, beta, oracle) == 2);
  for (int n : {-2, -1, 1, 2}) {
    CurveDiagram tn = dehn_twist(alpha, beta, n, oracle);
    CHECK(homology_class(tn) == expected_class(alpha, beta, n));
    // i(T^n(alpha), alpha) = |n| * i(alpha, beta)^2 with i = 2.
    CHECK(geometric_intersection(tn, alpha, oracle) == std::abs(n) * 4);
  }
}

TEST_CASE("twists preserve intersection numbers") {
  SurfacePtr s = standard_surface(2);
  ContractOracle oracle = ContractOracle::for_base(s);
  CurveDiagram gamma = edge_dual(s, 1);
  std::vector<CurveDiagram> curves = {edge_dual(s, 0), edge_dual(s, 2),
                                      must_embed(s, {1, 2, 3})};
  std::vector<CurveDiagram> images;
  for (const auto& c : curves) images.push_back(dehn_twist(c, gamma, 1, oracle));
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = 0; j < curves.size(); ++j) {
      CHECK(geometric_intersection(images[i], images[j], oracle) ==
            geometric_intersection(curves[i], curves[j], oracle));
      CHECK(algebraic_intersection(images[i], images[j]) ==
            algebraic_intersection(curves[i], curves[j]));
    }
}

TEST_CASE("disjoint twists commute") {
  SurfacePtr s = standard_surface(2);
  ContractOracle oracle = ContractOracle::for_base(s);
  DualPresentation pres(*s);
  CurveDiagram g1 = edge_dual(s, 0), g2 = edge_dual(s, 2);
  REQUIRE(geometric_intersection(g1, g2, oracle) == 0);
  CurveDiagram c = must_embed(s, {2, 4});
  CurveDiagram lr = apply_twist_word({{g1, 1}, {g2, 2}}, c, oracle);
  CurveDiagram rl = apply_twist_word({{g2, 2}, {g1, 1}}, c, oracle);
  CHECK(canon(pres, lr) == canon(pres, rl));
}

TEST_CASE("a twist word followed by its inverse is the identity") {
  SurfacePtr s = standard_surface(1);
  ContractOracle oracle = ContractOracle::for_base(s);
  DualPresentation pres(*s);
  TwistWord w = {{edge_dual(s, 1), 2}, {edge_dual(s, 0), -1}};
  CurveDiagram c = must_embed(s, {1, 1, 2});
  CurveDiagram back = apply_twist_word(inverse_twist_word(w),
                                       apply_twist_word(w, c, oracle), oracle);
  CHECK(canon(pres, back) == canon(pres, c));
  CHECK(back.size() == normalize(c).size());
}

TEST_CASE("twists about non-isotopic curves differ on a probe") {
  SurfacePtr s = standard_surface(1);
  ContractOracle oracle = ContractOracle::for_base(s);
  DualPresentation pres(*s);
  CurveDiagram a = edge_dual(s, 0), b = edge_dual(s, 1);
  CHECK(canon(pres, dehn_twist(b, a, 1, oracle)) != canon(pres, dehn_twist(b, b, 1, oracle)));
}

TEST_CASE("non-simple twisters are rejected") {
  SurfacePtr s = standard_surface(1);
  ContractOracle oracle = ContractOracle::for_base(s);
  // The (2,2) diagram crosses itself.
  CurveDiagram dbl =
      diagram_from_ranks(s, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}, {0, 0, 1, 1});
  REQUIRE(diagram_interleavings(dbl) > 0);
  CHECK_THROWS_AS(dehn_twist(edge_dual(s, 0), dbl, 1, oracle), PreconditionError);
  CHECK_THROWS_AS(apply_twist_word({{edge_dual(s, 0), 0}}, edge_dual(s, 1), oracle),
                  PreconditionError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcc/curve.hpp"

using namespace surfcc;

static CurveDiagram must_embed(const SurfacePtr& s, const Word& w) {
  auto d = embed_word(s, w);
  REQUIRE(d.has_value());
  return *d;
}

TEST_CASE("edge duals") {
  SurfacePtr s = standard_surface(2);
  for (int e = 0; e < s->num_edges(); ++e) {
    CurveDiagram d = edge_dual(s, e);
    CHECK(d.size() == 1);
    CHECK(d.crossing_word() == Word{e + 1});
    CHECK(diagram_interleavings(d) == 0);
    CHECK(normalize(d).crossing_word() == Word{e + 1});
    CHECK(d.reversed().crossing_word() == Word{-(e + 1)});
  }
}

TEST_CASE("signed edge vector and reversal") {
  SurfacePtr s = standard_surface(1);
  CurveDiagram d = must_embed(s, {1, 1, 2});
  CHECK(d.signed_edge_vector() == std::vector<long long>({2, 1}));
  CurveDiagram r = d.reversed();
  CHECK(r.signed_edge_vector() == std::vector<long long>({-2, -1}));
  CHECK(diagram_interleavings(r) == 0);
  CHECK(r.reversed().crossings() == d.crossings());
}

TEST_CASE("torus words embed exactly when primitive") {
  SurfacePtr s = standard_surface(1);
  CHECK(embed_word(s, {1, 2}).has_value());
  CHECK(embed_word(s, {1, 1, 2}).has_value());
  CHECK(embed_word(s, {1, 1, 2, 1, 2}).has_value());  // (3,2) balanced word
  CHECK_FALSE(embed_word(s, {1, 1, 2, 2}).has_value());  // (2,2): not simple
  CHECK_FALSE(embed_word(s, {1, 1, 1, 2, 2}).has_value());  // unbalanced (3,2) spelling
}

TEST_CASE("interleaving count is positive for a crossing pair") {
  SurfacePtr s = standard_surface(1);
  // (2,2) with the naive slot orders: the two strands must cross.
  CurveDiagram d = diagram_from_ranks(s, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}, {0, 0, 1, 1});
  CHECK(diagram_interleavings(d) > 0);
}

TEST_CASE("spur removal") {
  SurfacePtr s = standard_surface(1);
  // Crosses a and immediately back, then b: reduces to the b-dual.
  CurveDiagram d = diagram_from_ranks(s, {{0, 1}, {0, -1}, {1, 1}}, {0, 1, 0});
  CurveDiagram n = normalize(d);
  CHECK(n.size() == 1);
  CHECK(n.crossing_word() == Word{2});
}

TEST_CASE("contractible inputs are rejected") {
  SurfacePtr s = standard_surface(1);
  CurveDiagram d = diagram_from_ranks(s, {{0, 1}, {0, -1}}, {0, 1});
  CHECK_THROWS_AS(normalize(d), PreconditionError);
}

TEST_CASE("normalize reaches the geodesic crossing number (oracle: Dehn length)") {
  SurfacePtr g2 = standard_surface(2);
  DualPresentation pres(*g2);
  std::vector<Word> words = {
      {1, 2},          {1, 3},          {1, 2, -1, -2}, {2, 4},
      {1, 2, 3},       {1, -3, 2},      {1, 2, 1, 3},   {2, 3, -2, 4},
  };
  for (const Word& w : words) {
    CAPTURE(word_to_string(w, g2->edge_names()));
    auto d = embed_word(g2, w);
    if (!d) continue;  // not all of these are simple classes
    CurveDiagram n = normalize(*d);
    Word geo = pres.geodesic_cyclic(w);
    CHECK(n.size() == static_cast<int>(geo.size()));
    CHECK(diagram_interleavings(n) == 0);
    // Same free-homotopy class.
    CHECK(pres.conjugacy_canonical(n.crossing_word(), false) ==
          pres.conjugacy_canonical(w, false));
  }
}

TEST_CASE("normalize shortens a non-geodesic embedded diagram") {
  SurfacePtr g2 = standard_surface(2);
  DualPresentation pres(*g2);
  // More than half of the vertex-link relator: realizable embedded,
  // reducible to the complementary (shorter) subword.
  Word w(pres.relator().begin(), pres.relator().begin() + 5);
  auto d = embed_word(g2, w);
  REQUIRE(d.has_value());
  CurveDiagram n = normalize(*d);
  CHECK(n.size() == static_cast<int>(pres.geodesic_cyclic(w).size()));
  CHECK(pres.conjugacy_canonical(n.crossing_word(), false) ==
        pres.conjugacy_canonical(w, false));
}

TEST_CASE("torus normalize produces balanced words") {
  SurfacePtr s = standard_surface(1);
  // (3,2) in an unbalanced embedded position would not exist, but a
  // wandering representative does: a b a a^-1 a b a ~ (3,2).
  CurveDiagram d = must_embed(s, {1, 2, 1, -1, 1, 2, 1});
  CurveDiagram n = normalize(d);
  CHECK(n.size() == 5);
  CHECK(n.signed_edge_vector() == std::vector<long long>({3, 2}));
  CHECK(diagram_interleavings(n) == 0);
}

TEST_CASE("curve JSON round trip") {
  SurfacePtr s = standard_surface(2);
  CurveDiagram d = must_embed(s, {1, 2, 3});
  std::string j = curve_to_json(d);
  CurveDiagram e = curve_from_json(s, j);
  CHECK(e == d);
  CHECK_THROWS_AS(curve_from_json(s, "[]"), ParseError);
  CHECK_THROWS_AS(curve_from_json(s, R"({"crossings": [["zz", 1, 0]]})"), ParseError);
}

TEST_CASE("face-incompatible crossing sequences are rejected") {
  // Two-triangle torus: crossing d then a is fine only if the faces
  // match up; an impossible chain must throw.
  SurfacePtr s = surface_from_json(R"({"faces": [["a", "b", "-d"], ["d", "-a", "-b"]]})");
  // a+ goes from face 0 into face 1; a second a+ crossing immediately
  // after would have to start from face 0 again.
  std::vector<std::vector<int>> slots(s->num_edges());
  slots[s->edge_index("a").value()] = {0, 1};
  CHECK_THROWS_AS(CurveDiagram(s, {{0, 1}, {0, 1}}, slots), PreconditionError);
}

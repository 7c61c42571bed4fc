#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfcc/handlebody.hpp"

using namespace surfcc;

static CurveDiagram must_embed(const SurfacePtr& s, const Word& w) {
  auto d = embed_word(s, w);
  REQUIRE(d.has_value());
  return *d;
}

TEST_CASE("standard handlebody: defining disks are meridians") {
  for (int g : {1, 2, 3}) {
    HandlebodyStructure H = standard_handlebody(g);
    REQUIRE(H.genus() == g);
    for (const CurveDiagram& d : H.disk_system) {
      CHECK(handlebody_word(H, d).empty());
      CHECK(is_meridian(H, d));
    }
    CHECK(is_reduced_disk_system(H, H.disk_system));
  }
  CHECK_THROWS_AS(standard_handlebody(0), PreconditionError);
}

TEST_CASE("handlebody words of basic curves") {
  HandlebodyStructure H = standard_handlebody(2);
  const SurfacePtr& s = H.surface;
  // The curve crossing delta_1 once maps to x1.
  CHECK(handlebody_word(H, edge_dual(s, 1)) == Word({1}));
  CHECK(handlebody_word(H, edge_dual(s, 3)) == Word({2}));
  // The commutator curve crosses delta_1 twice with cancelling signs.
  CHECK(handlebody_word(H, must_embed(s, {1, 2, -1, -2})).empty());
  CHECK(is_meridian(H, must_embed(s, {1, 2, -1, -2})));
  CHECK_FALSE(is_meridian(H, edge_dual(s, 1)));
  // A curve through both handles.
  Word w = handlebody_word(H, must_embed(s, {2, 4}));
  CHECK((w == Word({1, 2}) || w == Word({-1, -2}) || w == Word({2, 1}) ||
         w == Word({-2, -1})));
}

TEST_CASE("meridian test is isotopy invariant") {
  HandlebodyStructure H = standard_handlebody(2);
  const SurfacePtr& s = H.surface;
  ContractOracle oracle = H.oracle;
  CurveDiagram sigma = must_embed(s, {1, 2, -1, -2});
  // A wandering isotopic copy: twist forth and back.
  CurveDiagram moved = dehn_twist(dehn_twist(sigma, edge_dual(s, 1), 1, oracle),
                                  edge_dual(s, 1), -1, oracle);
  CHECK(is_meridian(H, moved));
  // Meridian preservation under twists about meridians.
  for (const CurveDiagram& m : {H.disk_system[0], H.disk_system[1], sigma})
    for (const CurveDiagram& target : {H.disk_system[0], H.disk_system[1], sigma})
      CHECK(is_meridian(H, dehn_twist(target, m, 1, oracle)));
}

TEST_CASE("reduced disk system recognition") {
  HandlebodyStructure H = standard_handlebody(2);
  const SurfacePtr& s = H.surface;
  Multicurve good = H.disk_system;
  CHECK(is_reduced_disk_system(H, good));
  // Non-meridian component.
  CHECK_FALSE(is_reduced_disk_system(H, {edge_dual(s, 1), good[1]}));
  // Two parallel copies disconnect the complement.
  CHECK_FALSE(is_reduced_disk_system(H, {good[0], good[0]}));
  // Wrong cardinality is a contract violation, not "false".
  CHECK_THROWS_AS(is_reduced_disk_system(H, {good[0]}), PreconditionError);
}

TEST_CASE("find_wave on disjoint systems reports Disjoint") {
  HandlebodyStructure H = standard_handlebody(2);
  CHECK_FALSE(find_wave(H.disk_system, H.disk_system, H).has_value());
  CHECK_THROWS_AS(find_wave({edge_dual(H.surface, 1)}, H.disk_system, H),
                  PreconditionError);
}

TEST_CASE("find_wave on intersecting meridians yields a meridian surgery") {
  HandlebodyStructure H = standard_handlebody(2);
  const SurfacePtr& s = H.surface;
  // Meridians that genuinely intersect, found in the enumeration.
  std::vector<CurveDiagram> meridians;
  for (const CurveDiagram& c : enumerate_curves(s, 6))
    if (is_meridian(H, c)) meridians.push_back(c);
  REQUIRE(meridians.size() >= 2);
  int pairs_checked = 0;
  for (size_t i = 0; i < meridians.size(); ++i)
    for (size_t j = 0; j < meridians.size(); ++j) {
      if (i == j) continue;
      if (geometric_intersection(meridians[i], meridians[j], H.oracle) == 0) continue;
      auto w = find_wave({meridians[i]}, {meridians[j]}, H);
      REQUIRE(w.has_value());
      CHECK(w->host == 0);
      CHECK(w->hit_component == 0);
      CHECK(diagram_interleavings(w->surgery) == 0);
      CHECK(is_meridian(H, w->surgery));
      ++pairs_checked;
    }
  CHECK(pairs_checked > 0);  // the corpus does contain crossing meridians
}

TEST_CASE("check_multitwist verdicts") {
  HandlebodyStructure H = standard_handlebody(2);
  const SurfacePtr& s = H.surface;
  CurveDiagram d1 = H.disk_system[0], d2 = H.disk_system[1];
  CurveDiagram b1 = edge_dual(s, 1);

  auto v = check_multitwist(H, {{d1, -1}, {d2, -2}});
  CHECK(v.kind == ExtensionVerdict::Kind::AllMeridian);

  v = check_multitwist(H, {{d2, -1}, {b1, -1}});
  CHECK(v.kind == ExtensionVerdict::Kind::Obstructed);
  CHECK(v.witness == 1);

  // Parity: mixed signs, odd number of non-meridians.
  v = check_multitwist(H, {{b1, 1}, {b1, -1}, {b1, 1}});
  CHECK(v.kind == ExtensionVerdict::Kind::Obstructed);

  // Annulus candidate: opposite twists about parallel non-meridians.
  v = check_multitwist(H, {{b1, 1}, {b1, -1}});
  REQUIRE(v.kind == ExtensionVerdict::Kind::PairedCandidate);
  REQUIRE(v.pairs.size() == 1);
  CHECK(v.pairs[0] == std::pair<int, int>(0, 1));

  // Opposite signs but words in different generators: no pairing.
  v = check_multitwist(H, {{b1, 1}, {edge_dual(s, 3), -1}});
  CHECK(v.kind == ExtensionVerdict::Kind::Obstructed);

  // Intersecting factors violate the contract.
  CHECK_THROWS_AS(check_multitwist(H, {{d1, 1}, {b1, 1}}), PreconditionError);
}

TEST_CASE("disk exchange paths") {
  HandlebodyStructure H = standard_handlebody(2);
  const SurfacePtr& s = H.surface;
  Multicurve C = H.disk_system;

  auto p = disk_exchange_path(H, C, C, 4);
  REQUIRE(p.has_value());
  CHECK(p->size() == 1);

  // Reordered components are the same system.
  p = disk_exchange_path(H, C, {C[1], C[0]}, 4);
  REQUIRE(p.has_value());
  CHECK(p->size() == 1);

  // A genuinely different reduced system from the enumeration.
  std::vector<CurveDiagram> meridians;
  for (const CurveDiagram& c : enumerate_curves(s, 4))
    if (is_meridian(H, c)) meridians.push_back(c);
  ContractOracle oracle = H.oracle;
  auto canon = [&](const CurveDiagram& c) {
    return oracle.pres->conjugacy_canonical(c.crossing_word(), true);
  };
  bool found_target = false;
  for (const CurveDiagram& m : meridians) {
    if (canon(m) == canon(C[0]) || canon(m) == canon(C[1])) continue;
    Multicurve C2 = {m, C[1]};
    if (!is_reduced_disk_system(H, C2)) continue;
    found_target = true;
    auto path = disk_exchange_path(H, C, C2, 4);
    REQUIRE(path.has_value());
    CHECK(path->size() >= 2);
    // Consecutive systems fully disjoint.
    for (size_t t = 0; t + 1 < path->size(); ++t)
      for (const CurveDiagram& a : (*path)[t])
        for (const CurveDiagram& b : (*path)[t + 1])
          CHECK(geometric_intersection(a, b, oracle) == 0);
    for (const Multicurve& sys : *path) CHECK(is_reduced_disk_system(H, sys));
    break;
  }
  CHECK(found_target);

  CHECK_THROWS_AS(disk_exchange_path(H, {edge_dual(s, 1), C[1]}, C, 4),
                  PreconditionError);
}

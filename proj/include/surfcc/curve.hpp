#pragma once

#include <optional>
#include <vector>

#include "surfcc/surface.hpp"
#include "surfcc/words.hpp"

namespace surfcc {

// One transverse pass of a curve through an edge.  dir = +1 means the
// curve moves from face_of(+e) into face_of(-e).
struct Crossing {
  int edge = -1;
  int dir = +1;
  bool operator==(const Crossing&) const = default;
};

// A closed curve transverse to the 1-skeleton: a cyclic crossing
// sequence plus, per edge, the order of this curve's crossing points
// along the edge (in the direction of dart +e).  Immutable.
class CurveDiagram {
 public:
  CurveDiagram(SurfacePtr surface, std::vector<Crossing> crossings,
               std::vector<std::vector<int>> slots);

  const SurfacePtr& surface() const { return surface_; }
  int size() const { return static_cast<int>(crossings_.size()); }
  const Crossing& crossing(int k) const { return crossings_[k]; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<std::vector<int>>& slots() const { return slots_; }
  const std::vector<int>& slots_on_edge(int e) const { return slots_[e]; }
  // Position of crossing k among the curve's points on its edge.
  int rank_of(int k) const { return rank_[k]; }

  // Dart on whose face side the curve leaves through crossing k.
  Dart exit_dart(int k) const { return Dart::make(crossings_[k].edge, crossings_[k].dir); }
  // Dart on whose face side the curve arrives after crossing k.
  Dart enter_dart(int k) const { return Dart::make(crossings_[k].edge, -crossings_[k].dir); }
  // Face containing the arc from crossing k to crossing k+1.
  int arc_face(int k) const { return surface_->face_of(enter_dart(k)); }

  CurveDiagram reversed() const;
  Word crossing_word() const;  // letters +-(edge+1)
  // Signed crossing count per edge; the homology invariant on
  // one-vertex surfaces, and well-defined mod vertex coboundaries in
  // general.
  std::vector<long long> signed_edge_vector() const;

  bool operator==(const CurveDiagram& o) const {
    return crossings_ == o.crossings_ && slots_ == o.slots_;
  }

 private:
  SurfacePtr surface_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> slots_;
  std::vector<int> rank_;
};

// The curve crossing edge e exactly once (transverse edge dual).
CurveDiagram edge_dual(const SurfacePtr& s, int edge, int dir = +1);

// Build slots from per-crossing slot ranks (used by parsers).
CurveDiagram diagram_from_ranks(SurfacePtr s, std::vector<Crossing> crossings,
                                const std::vector<int>& ranks);

// Number of interleaving chord pairs of the diagram against itself in
// its own slot position (0 certifies an embedded diagram).
int diagram_interleavings(const CurveDiagram& c);

// Taut form: iterated spur removal and over-half vertex-fan pushes;
// deterministic; falls back to re-embedding the geodesic crossing word
// on one-vertex surfaces.
CurveDiagram normalize(const CurveDiagram& c);

// Find an embedded diagram realizing the given (cyclically reduced)
// crossing word, if one exists: backtracking search over slot orders.
std::optional<CurveDiagram> embed_word(const SurfacePtr& s, const Word& word);

std::string curve_to_json(const CurveDiagram& c);
CurveDiagram curve_from_json(const SurfacePtr& s, const std::string& text);

namespace detail {

// Crossing-point occurrences along one face boundary, in cyclic order.
// A point on edge e appears once on dart +e (ascending slots) and once
// on dart -e (descending slots), in general on two different faces.
struct FaceBoundary {
  struct Item {
    int crossing;
    Dart dart;
  };
  std::vector<Item> items;
  int position_of(int crossing, Dart dart) const;
};

FaceBoundary face_boundary(const CurveDiagram& c, int face);
// Whether chords {a1,a2} and {b1,b2} cross inside the disk whose
// boundary positions they index.
bool chords_interleave(int a1, int a2, int b1, int b2);

}  // namespace detail

}  // namespace surfcc

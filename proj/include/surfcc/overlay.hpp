#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "surfcc/curve.hpp"
#include "surfcc/words.hpp"

namespace surfcc {

// Decides contractibility of crossing words, projecting cover words to
// the base surface first (pi_1 of a cover injects into the base group).
struct ContractOracle {
  std::shared_ptr<const DualPresentation> pres;
  std::vector<int> edge_to_base;  // cover edge id -> base edge id

  Word project(const Word& w) const;
  bool contractible(const Word& w) const { return pres->is_trivial(project(w)); }

  // Oracle for curves living directly on a one-vertex base surface.
  static ContractOracle for_base(const SurfacePtr& s);
};

// A point of the merged edge order: crossing `index` of curve `curve`.
struct MergedPoint {
  int curve;
  int index;
  bool operator==(const MergedPoint&) const = default;
};

// Several curve diagrams in joint position: a merged slot order per
// edge plus the induced chord arrangement inside every face.
// Immutable; mutations produce new overlays.
class Overlay {
 public:
  // Joint position with curve k's points stacked after curve k-1's on
  // every edge (always realizable).
  static Overlay sequential(SurfacePtr s, std::vector<CurveDiagram> curves);

  Overlay(SurfacePtr s, std::vector<CurveDiagram> curves,
          std::vector<std::vector<MergedPoint>> merged);

  const SurfacePtr& surface() const { return surface_; }
  int num_curves() const { return static_cast<int>(curves_.size()); }
  const CurveDiagram& curve(int i) const { return curves_[i]; }
  const std::vector<std::vector<MergedPoint>>& merged() const { return merged_; }

  struct Isect {
    int ca, arc_a;  // chord: arc arc_a of curve ca
    int cb, arc_b;  // with ca < cb
    int face;
    // +1 iff (tangent of the ca-arc, tangent of the cb-arc) is a
    // positively oriented frame (faces are positively oriented).
    int sign;
    int curve_of_side(int which) const { return which == 0 ? ca : cb; }
  };
  const std::vector<Isect>& isects() const { return isects_; }
  // Intersection ids in cyclic traversal order along curve c (all
  // partners merged).
  const std::vector<int>& along(int c) const { return along_[c]; }

  int count_pair(int i, int j) const;
  // Sum of signs with curve i as the first (tangent-frame) factor.
  long long signed_sum(int i, int j) const;

  // Crossing word of the subarc of curve c from intersection x to
  // intersection y in the given direction (+1 forward), letters are
  // the skeleton edges crossed strictly between them.
  Word subarc_word(int c, int x, int y, int dir) const;

  // Arrangement sanity: every curve still embedded in the joint
  // position, and V - E + F of the full arrangement equals chi.
  void validate() const;
  // Number of regions of the full arrangement (all curves + skeleton).
  int num_arrangement_faces() const;

  // Components of Sigma minus the named curves.  Returns the number of
  // regions, the region on each side of every named curve
  // (left, right), and for every crossing of `probe` with a named
  // curve (in order along probe): which named curve, the sign, and the
  // region the probe sits in just before that crossing.
  struct Itinerary {
    int num_regions = 0;
    std::vector<std::pair<int, int>> cut_sides;  // per cut curve: (left, right)
    struct Step {
      int cut;     // index into the cuts list
      int sign;    // +1: probe crosses right-to-left of the cut curve
      int region_before;
    };
    std::vector<Step> steps;  // cyclic, ordered along probe
  };
  Itinerary itinerary(int probe, const std::vector<int>& cuts) const;

 private:
  void build();

  SurfacePtr surface_;
  std::vector<CurveDiagram> curves_;
  std::vector<std::vector<MergedPoint>> merged_;

  // Derived tables.
  std::vector<std::vector<int>> merged_rank_;  // per curve: crossing -> rank in its edge's merged order
  std::vector<std::vector<int>> along_;
  std::vector<Isect> isects_;
  // Per curve and arc: isect ids in order along the arc.
  std::vector<std::vector<std::vector<int>>> arc_isects_;

  friend class Arrangement;
};

// Remove empty bigons between curves i and j until none remain; other
// curves are obstacles (their crossings keep bigons from being empty).
Overlay reduce_pair_bigons(Overlay o, int i, int j, const ContractOracle& oracle);
// Reduce every pair until the whole configuration is bigon-free.
Overlay reduce_all_bigons(Overlay o, const ContractOracle& oracle);

// Minimal crossing number over isotopy (bigon criterion).
int geometric_intersection(const CurveDiagram& a, const CurveDiagram& b,
                           const ContractOracle& oracle);
// Signed count, isotopy invariant; no reduction needed.
long long algebraic_intersection(const CurveDiagram& a, const CurveDiagram& b);

// Homology class as signed edge-crossing coordinates (one-vertex
// surfaces: these are exact coordinates in the edge-dual basis).
std::vector<long long> homology_class(const CurveDiagram& c);

// Minimal self-intersection number.  0 for embedded diagrams; small
// non-embedded classes are handled by minimizing over geodesic
// representatives and slot orders.
int self_intersection(const CurveDiagram& c, const ContractOracle& oracle);

}  // namespace surfcc

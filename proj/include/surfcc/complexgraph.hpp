#pragma once

#include "surfcc/handlebody.hpp"

namespace surfcc {

enum class SliceFlavor { CurveGraph, DiskGraph, MulticurveGraph };

// A finite slice of the curve / disk / multicurve graph: vertices are
// multicurves (single curves for the first two flavors), edges are
// componentwise disjointness.  Immutable once built.
struct GraphSlice {
  SliceFlavor flavor;
  int bound = 0;  // enumeration crossing bound, carried as an annotation
  std::vector<Multicurve> vertices;
  std::vector<std::vector<CurveKey>> keys;  // sorted component keys per vertex
  std::vector<std::pair<int, int>> edges;   // i < j, disjoint vertices

  bool adjacent(int u, int v) const;
  std::optional<int> find_vertex(const std::vector<CurveKey>& key) const;
};

// Build a slice.  Disk flavor requires H and every vertex to be a
// meridian; multicurve vertices must have pairwise disjoint simple
// components.  Duplicate vertex keys are a hard error (a silent merge
// would corrupt superinjectivity witnesses).
GraphSlice graph_slice(const SurfacePtr& s, const std::vector<Multicurve>& curves,
                       const HandlebodyStructure* H, SliceFlavor flavor, int bound = 0);

// The link of a reduced disk system inside a slice: all vertices
// disjoint from the full system, and whether each is a meridian (§2:
// a curve disjoint from a reduced disk system is a meridian).
struct LinkReport {
  std::vector<int> link_vertices;
  std::vector<int> non_meridians;  // link vertices failing is_meridian
  bool contained_in_disk_graph = true;
  int bound = 0;
};
LinkReport link_check(const GraphSlice& slice, const Multicurve& delta_system,
                      const HandlebodyStructure& H);

// Whether the vertex map preserves edges and non-edges; the first
// violating pair is reported.  A pair collapsed to one vertex counts
// as disjoint images.
struct SuperinjectivityReport {
  bool ok = true;
  int witness_u = -1, witness_v = -1;
  std::string reason;
};
SuperinjectivityReport is_superinjective(const std::vector<int>& m, const GraphSlice& dom,
                                         const GraphSlice& cod);

// Deterministic DOT export with flavor and bound annotations.
std::string slice_to_dot(const GraphSlice& slice);
// Plain-text symmetric adjacency matrix.
std::string slice_adjacency_text(const GraphSlice& slice);

}  // namespace surfcc

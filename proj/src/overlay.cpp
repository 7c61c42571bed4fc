#include "surfcc/overlay.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace surfcc {

Word ContractOracle::project(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    int e = std::abs(x) - 1;
    check_internal(e >= 0 && e < static_cast<int>(edge_to_base.size()),
                   "contractibility oracle: letter outside surface");
    out.push_back((x > 0 ? 1 : -1) * (edge_to_base[e] + 1));
  }
  return out;
}

ContractOracle ContractOracle::for_base(const SurfacePtr& s) {
  require(s->num_vertices() == 1, "contractibility oracle needs a one-vertex surface");
  ContractOracle o;
  o.pres = std::make_shared<DualPresentation>(*s);
  o.edge_to_base.resize(s->num_edges());
  std::iota(o.edge_to_base.begin(), o.edge_to_base.end(), 0);
  return o;
}

Overlay Overlay::sequential(SurfacePtr s, std::vector<CurveDiagram> curves) {
  std::vector<std::vector<MergedPoint>> merged(s->num_edges());
  for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
    require(curves[c].surface()->structurally_equal(*s), "curve on a different surface");
    for (int e = 0; e < s->num_edges(); ++e)
      for (int k : curves[c].slots_on_edge(e)) merged[e].push_back({c, k});
  }
  return Overlay(std::move(s), std::move(curves), std::move(merged));
}

Overlay::Overlay(SurfacePtr s, std::vector<CurveDiagram> curves,
                 std::vector<std::vector<MergedPoint>> merged)
    : surface_(std::move(s)), curves_(std::move(curves)), merged_(std::move(merged)) {
  build();
}

namespace {
inline int cyc_dist(int from, int to, int m) { return ((to - from) % m + m) % m; }
}  // namespace

void Overlay::build() {
  const int nc = num_curves();
  const int ne = surface_->num_edges();
  check_internal(static_cast<int>(merged_.size()) == ne, "merged order table size mismatch");

  // Rank of every curve point inside its edge's merged order, checking
  // that each point appears exactly once and that the merged order
  // refines each curve's own slot order.
  merged_rank_.assign(nc, {});
  for (int c = 0; c < nc; ++c) merged_rank_[c].assign(curves_[c].size(), -1);
  for (int e = 0; e < ne; ++e) {
    std::vector<std::vector<int>> per_curve(nc);
    for (int r = 0; r < static_cast<int>(merged_[e].size()); ++r) {
      const MergedPoint& p = merged_[e][r];
      check_internal(p.curve >= 0 && p.curve < nc && p.index >= 0 &&
                         p.index < curves_[p.curve].size() &&
                         curves_[p.curve].crossing(p.index).edge == e &&
                         merged_rank_[p.curve][p.index] == -1,
                     "invalid merged point");
      merged_rank_[p.curve][p.index] = r;
      per_curve[p.curve].push_back(p.index);
    }
    for (int c = 0; c < nc; ++c)
      check_internal(per_curve[c] == curves_[c].slots_on_edge(e),
                     "merged order does not refine the curve's slot order");
  }

  // Boundary position of every point occurrence.  Walking a face cycle,
  // points on dart +e are met in ascending merged order, on -e
  // descending.
  const int nf = surface_->num_faces();
  std::vector<int> face_len(nf, 0);
  std::vector<std::vector<std::array<int, 2>>> pos(nc);  // [point][occ on +e / -e]
  for (int c = 0; c < nc; ++c) pos[c].assign(curves_[c].size(), {-1, -1});
  for (int f = 0; f < nf; ++f) {
    int& cnt = face_len[f];
    for (Dart d : surface_->faces()[f]) {
      const auto& pts = merged_[d.edge()];
      if (d.sign() > 0)
        for (const MergedPoint& p : pts) pos[p.curve][p.index][0] = cnt++;
      else
        for (auto it = pts.rbegin(); it != pts.rend(); ++it)
          pos[it->curve][it->index][1] = cnt++;
    }
  }
  auto pos_on = [&](int c, int k, Dart d) { return pos[c][k][d.sign() > 0 ? 0 : 1]; };

  // One chord per arc.
  struct Chord {
    int c = -1, j = -1, p = -1, q = -1, face = -1;
  };
  std::vector<std::vector<Chord>> face_chords(nf);
  std::map<std::pair<int, int>, Chord> chord_at;
  for (int c = 0; c < nc; ++c) {
    const CurveDiagram& cur = curves_[c];
    for (int j = 0; j < cur.size(); ++j) {
      int j2 = (j + 1) % cur.size();
      Chord ch{c, j, pos_on(c, j, cur.enter_dart(j)), pos_on(c, j2, cur.exit_dart(j2)),
               cur.arc_face(j)};
      face_chords[ch.face].push_back(ch);
      chord_at[{c, j}] = ch;
    }
  }

  isects_.clear();
  arc_isects_.assign(nc, {});
  for (int c = 0; c < nc; ++c) arc_isects_[c].assign(curves_[c].size(), {});

  for (int f = 0; f < nf; ++f) {
    const auto& chords = face_chords[f];
    const int m = face_len[f];
    for (size_t u = 0; u < chords.size(); ++u)
      for (size_t v = u + 1; v < chords.size(); ++v) {
        const Chord &U = chords[u], &V = chords[v];
        bool in1 = V.p != U.p && cyc_dist(U.p, V.p, m) < cyc_dist(U.p, U.q, m);
        bool in2 = V.q != U.p && cyc_dist(U.p, V.q, m) < cyc_dist(U.p, U.q, m);
        if (in1 == in2) continue;  // endpoints do not interleave
        const Chord& A = (U.c <= V.c) ? U : V;
        const Chord& B = (U.c <= V.c) ? V : U;
        check_internal(A.c != B.c, "curve crosses itself in joint position");
        // +1 iff walking ccw from A's start meets B's start before B's
        // end, i.e. B crosses A from A's right to A's left.
        int sign = cyc_dist(A.p, B.p, m) < cyc_dist(A.p, B.q, m) ? +1 : -1;
        int id = static_cast<int>(isects_.size());
        isects_.push_back({A.c, A.j, B.c, B.j, f, sign});
        arc_isects_[A.c][A.j].push_back(id);
        arc_isects_[B.c][B.j].push_back(id);
      }
  }

  // Order the crossings along each arc by realizing every face's chord
  // system with straight segments between boundary points placed in
  // convex position on the parabola (x, x^2).  Straight chords of
  // points in convex position cross exactly when their endpoints
  // interleave, so this produces a geometric realization of the exact
  // crossing set, and ordering by the intersection parameter along each
  // chord is globally consistent.  For parabola points the line test
  // factors: the chord through boundary points c, d evaluates at
  // boundary point a to (x_a - x_c)(x_a - x_d).
  for (int f = 0; f < nf; ++f) {
    const auto& chords = face_chords[f];
    if (chords.empty()) continue;
    const int m = face_len[f];
    for (int attempt = 0;; ++attempt) {
      check_internal(attempt < 64, "could not perturb chords into general position");
      // Strictly increasing x coordinates; later attempts jitter them
      // to break three-chord concurrences.
      std::vector<long long> x(m);
      for (int i = 0; i < m; ++i)
        x[i] = 8LL * i + ((1469598103934665603ULL * (i + 1) * attempt) % 8);
      bool tie = false;
      for (const Chord& ch : chords) {
        auto& list = arc_isects_[ch.c][ch.j];
        if (list.size() <= 1) continue;
        // Intersection parameter along the chord from its start:
        // t = f1 / (f1 - f2), normalized to a positive denominator.
        auto frac = [&](int id) {
          const Isect& is = isects_[id];
          bool first = (is.ca == ch.c && is.arc_a == ch.j);
          const Chord& other =
              first ? chord_at[{is.cb, is.arc_b}] : chord_at[{is.ca, is.arc_a}];
          __int128 f1 = static_cast<__int128>(x[ch.p] - x[other.p]) * (x[ch.p] - x[other.q]);
          __int128 f2 = static_cast<__int128>(x[ch.q] - x[other.p]) * (x[ch.q] - x[other.q]);
          __int128 den = f1 - f2;
          if (den < 0) return std::pair<__int128, __int128>{-f1, -den};
          return std::pair<__int128, __int128>{f1, den};
        };
        std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
          auto [na, da] = frac(a);
          auto [nb, db] = frac(b);
          return na * db < nb * da;
        });
        for (size_t i = 0; i + 1 < list.size() && !tie; ++i) {
          auto [na, da] = frac(list[i]);
          auto [nb, db] = frac(list[i + 1]);
          if (na * db == nb * da) tie = true;
        }
        if (tie) break;
      }
      if (!tie) break;
    }
  }

  along_.assign(nc, {});
  for (int c = 0; c < nc; ++c)
    for (int j = 0; j < curves_[c].size(); ++j)
      for (int id : arc_isects_[c][j]) along_[c].push_back(id);
}

int Overlay::count_pair(int i, int j) const {
  int lo = std::min(i, j), hi = std::max(i, j);
  int n = 0;
  for (const Isect& is : isects_)
    if (is.ca == lo && is.cb == hi) ++n;
  return n;
}

long long Overlay::signed_sum(int i, int j) const {
  int lo = std::min(i, j), hi = std::max(i, j);
  long long s = 0;
  for (const Isect& is : isects_)
    if (is.ca == lo && is.cb == hi) s += (i == lo) ? is.sign : -is.sign;
  return s;
}

Word Overlay::subarc_word(int c, int x, int y, int dir) const {
  // Events along curve c: edge crossings interleaved with intersection
  // points, in cyclic traversal order.
  struct Event {
    bool is_isect;
    int id;  // crossing index or intersection id
  };
  const CurveDiagram& cur = curves_[c];
  std::vector<Event> ev;
  for (int j = 0; j < cur.size(); ++j) {
    ev.push_back({false, j});
    for (int id : arc_isects_[c][j]) ev.push_back({true, id});
  }
  const int M = static_cast<int>(ev.size());
  int start = -1;
  for (int t = 0; t < M; ++t)
    if (ev[t].is_isect && ev[t].id == x) start = t;
  check_internal(start != -1, "subarc endpoint is not on the curve");
  Word w;
  int t = start;
  for (int steps = 0; steps < M; ++steps) {
    t = (t + dir + M) % M;
    if (ev[t].is_isect) {
      if (ev[t].id == y) return w;
      continue;
    }
    const Crossing& cr = cur.crossing(ev[t].id);
    w.push_back(dir * cr.dir * (cr.edge + 1));
  }
  check_internal(false, "subarc endpoint not reached");
  return w;
}

// ---------------------------------------------------------------------------
// Arrangement: the graph cut out of the surface by the skeleton plus all
// curves, with a rotation system at every node; its faces come from
// orbit traversal, which is the real planarity check on the chosen
// crossing orders.
//
// Orientation: face cycles are ccw (interior on the left of each dart).
// The corner orbit produced by the surface tables runs clockwise in
// that orientation, so it is reversed here.

class Arrangement {
 public:
  explicit Arrangement(const Overlay& o) : o_(o), s_(*o.surface()) { build(); }

  int num_nodes = 0;
  struct Segment {
    int kind;            // 0 skeleton, 1 curve arc
    int curve = -1;      // for kind 1
    int a = -1, b = -1;  // endpoint nodes; forward half runs a -> b
  };
  std::vector<Segment> segments;
  // Half-edge 2s = forward (along +e / along the curve), 2s+1 = back.
  // face_of_half[h] = arrangement face on the LEFT of h.
  std::vector<int> face_of_half;
  int num_faces = 0;

  int vertex_node(int v) const { return v; }
  int point_node(int c, int k) const { return point_base_[c] + k; }
  int isect_node(int id) const { return isect_base_ + id; }

  // Segment ids of arc (c, j), in order along the curve.
  const std::vector<int>& arc_segments(int c, int j) const { return arc_segs_[c][j]; }

  int euler() const { return num_nodes - static_cast<int>(segments.size()) + num_faces; }

 private:
  void build();

  const Overlay& o_;
  const PolySurface& s_;
  std::vector<int> point_base_;
  int isect_base_ = 0;
  std::vector<std::vector<std::vector<int>>> arc_segs_;
  std::vector<std::vector<int>> rotation_;  // per node: outgoing half-edges, ccw
};

void Arrangement::build() {
  const int nc = o_.num_curves();
  const int nv = s_.num_vertices();
  point_base_.resize(nc);
  int next = nv;
  for (int c = 0; c < nc; ++c) {
    point_base_[c] = next;
    next += o_.curve(c).size();
  }
  isect_base_ = next;
  num_nodes = next + static_cast<int>(o_.isects().size());
  rotation_.assign(num_nodes, {});

  auto add_segment = [&](int kind, int curve, int a, int b) {
    segments.push_back({kind, curve, a, b});
    return static_cast<int>(segments.size()) - 1;
  };
  auto fwd = [](int seg) { return 2 * seg; };
  auto back = [](int seg) { return 2 * seg + 1; };

  // Skeleton segments per edge, in +e order.
  std::vector<std::vector<int>> edge_segs(s_.num_edges());
  for (int e = 0; e < s_.num_edges(); ++e) {
    Dart pe = Dart::make(e, +1);
    std::vector<int> chain = {vertex_node(s_.vertex_at_head(pe.mate()))};
    for (const MergedPoint& p : o_.merged()[e]) chain.push_back(point_node(p.curve, p.index));
    chain.push_back(vertex_node(s_.vertex_at_head(pe)));
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      edge_segs[e].push_back(add_segment(0, -1, chain[i], chain[i + 1]));
  }

  // Arc segments.
  arc_segs_.assign(nc, {});
  for (int c = 0; c < nc; ++c) {
    const CurveDiagram& cur = o_.curve(c);
    arc_segs_[c].assign(cur.size(), {});
    for (int j = 0; j < cur.size(); ++j) {
      std::vector<int> chain = {point_node(c, j)};
      for (int id : o_.arc_isects_[c][j]) chain.push_back(isect_node(id));
      chain.push_back(point_node(c, (j + 1) % cur.size()));
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        arc_segs_[c][j].push_back(add_segment(1, c, chain[i], chain[i + 1]));
    }
  }

  // Surface vertices: one edge-end stub per corner, corner orbit
  // reversed for a ccw rotation.
  for (int v = 0; v < nv; ++v) {
    const auto& corners = s_.vertex_corners()[v];
    for (auto it = corners.rbegin(); it != corners.rend(); ++it) {
      const auto& cyc = s_.faces()[s_.face_of(*it)];
      Dart n = cyc[(s_.pos_in_face(*it) + 1) % cyc.size()];  // tail at v
      if (n.sign() > 0)
        rotation_[v].push_back(fwd(edge_segs[n.edge()].front()));
      else
        rotation_[v].push_back(back(edge_segs[n.edge()].back()));
    }
  }

  // Edge points, ccw: [toward tail, face(-e) side, toward head,
  // face(+e) side].  The incoming arc (k-1) sits in the face of
  // dart(e, dir), the outgoing arc k in the face of dart(e, -dir).
  for (int c = 0; c < nc; ++c) {
    const CurveDiagram& cur = o_.curve(c);
    const int n = cur.size();
    for (int k = 0; k < n; ++k) {
      const Crossing& cr = cur.crossing(k);
      int r = o_.merged_rank_[c][k];
      int in_half = back(arc_segs_[c][(k - 1 + n) % n].back());
      int out_half = fwd(arc_segs_[c][k].front());
      int minus_side = (cr.dir == -1) ? in_half : out_half;
      int plus_side = (cr.dir == -1) ? out_half : in_half;
      rotation_[point_node(c, k)] = {back(edge_segs[cr.edge][r]), minus_side,
                                     fwd(edge_segs[cr.edge][r + 1]), plus_side};
    }
  }

  // Intersection points: positive frame (A, B) means B is ccw of A.
  for (int id = 0; id < static_cast<int>(o_.isects().size()); ++id) {
    const Overlay::Isect& is = o_.isects()[id];
    auto rank_in = [&](int c, int j) {
      const auto& l = o_.arc_isects_[c][j];
      return static_cast<int>(std::find(l.begin(), l.end(), id) - l.begin());
    };
    int ra = rank_in(is.ca, is.arc_a), rb = rank_in(is.cb, is.arc_b);
    int a_in = back(arc_segs_[is.ca][is.arc_a][ra]);
    int a_out = fwd(arc_segs_[is.ca][is.arc_a][ra + 1]);
    int b_in = back(arc_segs_[is.cb][is.arc_b][rb]);
    int b_out = fwd(arc_segs_[is.cb][is.arc_b][rb + 1]);
    if (is.sign > 0)
      rotation_[isect_node(id)] = {a_out, b_out, a_in, b_in};
    else
      rotation_[isect_node(id)] = {a_out, b_in, a_in, b_out};
  }

  // Faces on the left: orbits of h -> predecessor-in-rotation of twin(h).
  const int nh = 2 * static_cast<int>(segments.size());
  std::vector<int> pos_in_rot(nh, -1), node_of_half(nh, -1);
  for (int v = 0; v < num_nodes; ++v)
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      int h = rotation_[v][i];
      check_internal(pos_in_rot[h] == -1, "half-edge appears twice in rotations");
      pos_in_rot[h] = i;
      node_of_half[h] = v;
    }
  for (int h = 0; h < nh; ++h)
    check_internal(pos_in_rot[h] != -1, "half-edge missing from rotations");

  face_of_half.assign(nh, -1);
  num_faces = 0;
  for (int h0 = 0; h0 < nh; ++h0) {
    if (face_of_half[h0] != -1) continue;
    int f = num_faces++;
    for (int h = h0; face_of_half[h] == -1;) {
      face_of_half[h] = f;
      int t = h ^ 1;
      int v = node_of_half[t];
      int deg = static_cast<int>(rotation_[v].size());
      h = rotation_[v][(pos_in_rot[t] - 1 + deg) % deg];
    }
  }
}

void Overlay::validate() const {
  for (int c = 0; c < num_curves(); ++c)
    check_internal(diagram_interleavings(curves_[c]) == 0, "overlay curve is not embedded");
  Arrangement arr(*this);
  check_internal(arr.euler() == surface_->euler_characteristic(),
                 "arrangement is not planar over the surface (crossing order defect)");
}

int Overlay::num_arrangement_faces() const { return Arrangement(*this).num_faces; }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Overlay::Itinerary Overlay::itinerary(int probe, const std::vector<int>& cuts) const {
  require(std::find(cuts.begin(), cuts.end(), probe) == cuts.end(),
          "the probe curve may not be one of the cut curves");
  Arrangement arr(*this);
  check_internal(arr.euler() == surface_->euler_characteristic(),
                 "arrangement is not planar over the surface (crossing order defect)");
  std::vector<char> is_cut(num_curves(), 0);
  for (int c : cuts) {
    require(c >= 0 && c < num_curves(), "cut curve index out of range");
    is_cut[c] = 1;
  }

  // Regions of the complement of the cut curves: arrangement faces
  // merged across every segment not lying on a cut curve.
  UnionFind uf(arr.num_faces);
  for (int s = 0; s < static_cast<int>(arr.segments.size()); ++s) {
    const auto& seg = arr.segments[s];
    if (seg.kind == 1 && is_cut[seg.curve]) continue;
    uf.unite(arr.face_of_half[2 * s], arr.face_of_half[2 * s + 1]);
  }
  std::vector<int> region_id(arr.num_faces, -1);
  int num_regions = 0;
  for (int f = 0; f < arr.num_faces; ++f)
    if (uf.find(f) == f) region_id[f] = num_regions++;
  auto region = [&](int face) { return region_id[uf.find(face)]; };

  Itinerary out;
  out.num_regions = num_regions;
  for (int c : cuts) {
    int s0 = arr.arc_segments(c, 0).front();
    out.cut_sides.push_back(
        {region(arr.face_of_half[2 * s0]), region(arr.face_of_half[2 * s0 + 1])});
  }
  for (int id : along_[probe]) {
    const Isect& is = isects_[id];
    int other = (is.ca == probe) ? is.cb : is.ca;
    if (!is_cut[other]) continue;
    int cut_index =
        static_cast<int>(std::find(cuts.begin(), cuts.end(), other) - cuts.begin());
    // +1 iff the probe crosses the cut right-to-left, i.e. the frame
    // (cut tangent, probe tangent) is positive.
    int sign = (is.ca == probe) ? -is.sign : is.sign;
    int arc = (is.ca == probe) ? is.arc_a : is.arc_b;
    const auto& l = arc_isects_[probe][arc];
    int rank = static_cast<int>(std::find(l.begin(), l.end(), id) - l.begin());
    int seg_before = arr.arc_segments(probe, arc)[rank];
    out.steps.push_back({cut_index, sign, region(arr.face_of_half[2 * seg_before])});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bigon reduction.

namespace {

struct BigonSpec {
  int x = -1, y = -1;  // intersection ids; along curve i, x is followed by y
  int dir_fwd = 0;     // direction along curve j from x to y on the empty side
};

int arc_on(const Overlay& o, int c, int id) {
  const Overlay::Isect& is = o.isects()[id];
  return (is.ca == c) ? is.arc_a : is.arc_b;
}

// Rank of intersection id among the intersections on arc `arc` of
// curve c, in order along the arc.
int rank_in_arc(const Overlay& o, int c, int arc, int id) {
  int count = 0;
  for (int q : o.along(c)) {
    if (arc_on(o, c, q) != arc) continue;
    if (q == id) return count;
    ++count;
  }
  check_internal(false, "intersection not found on its arc");
  return -1;
}

// Search for an empty bigon between curves i and j: intersections x, y
// adjacent along i (no crossing with any curve between them), adjacent
// along j, of opposite signs, whose boundary loop is contractible.
std::optional<BigonSpec> find_empty_bigon(const Overlay& o, int i, int j,
                                          const ContractOracle& oracle) {
  const auto& ai = o.along(i);
  const auto& aj = o.along(j);
  const int Li = static_cast<int>(ai.size());
  const int Lj = static_cast<int>(aj.size());
  if (Li < 2 || Lj < 2) return std::nullopt;
  auto partner = [&](int id) {
    const Overlay::Isect& is = o.isects()[id];
    return (is.ca == i) ? is.cb : is.ca;
  };
  std::vector<int> pos_j(o.isects().size(), -1);
  for (int t = 0; t < Lj; ++t) pos_j[aj[t]] = t;

  for (int t = 0; t < Li; ++t) {
    int x = ai[t], y = ai[(t + 1) % Li];
    if (x == y) continue;
    if (partner(x) != j || partner(y) != j) continue;
    if (o.isects()[x].sign == o.isects()[y].sign) continue;
    int px = pos_j[x], py = pos_j[y];
    check_internal(px >= 0 && py >= 0, "bigon crossing missing along partner curve");
    std::vector<int> dirs;
    if ((px + 1) % Lj == py) dirs.push_back(+1);  // x -> y forward along j is empty
    if ((py + 1) % Lj == px) dirs.push_back(-1);  // x -> y backward along j is empty
    for (int dir_fwd : dirs) {
      // Bigon boundary: along i from x to y, back along j from y to x.
      Word w = o.subarc_word(i, x, y, +1);
      Word ret = o.subarc_word(j, y, x, -dir_fwd);
      w.insert(w.end(), ret.begin(), ret.end());
      if (oracle.contractible(w)) return BigonSpec{x, y, dir_fwd};
    }
  }
  return std::nullopt;
}

// Remove the bigon: the subarc of curve i between x and y is replaced
// by a parallel copy of the empty subarc of curve j, pushed to the
// given side of j (0 = left of j).  Every other curve keeps its diagram
// and its merged positions.
Overlay remove_bigon(const Overlay& o, int i, int j, const BigonSpec& bg, int side) {
  const CurveDiagram& a = o.curve(i);
  const CurveDiagram& b = o.curve(j);
  const int na = a.size(), nb = b.size();

  int ax = arc_on(o, i, bg.x), ay = arc_on(o, i, bg.y);
  int bx = arc_on(o, j, bg.x), by = arc_on(o, j, bg.y);

  // Crossings of curve i consumed by the bigon: ax+1 .. ay cyclically.
  // If x and y sit on the same arc in order none are consumed; if out
  // of order the subarc wraps through every crossing.
  bool removed_all = false, removed_none = false;
  if (ax == ay) {
    if (rank_in_arc(o, i, ax, bg.x) < rank_in_arc(o, i, ay, bg.y))
      removed_none = true;
    else
      removed_all = true;
  }
  std::vector<char> removed(na, 0);
  std::vector<int> kept;  // old indices in new cyclic order, starting after y
  if (removed_all) {
    std::fill(removed.begin(), removed.end(), 1);
  } else {
    if (!removed_none)
      for (int k = (ax + 1) % na;; k = (k + 1) % na) {
        removed[k] = 1;
        if (k == ay) break;
      }
    for (int k = (ay + 1) % na;; k = (k + 1) % na) {
      if (!removed[k]) kept.push_back(k);
      if (k == ax) break;
    }
  }

  // Crossings of curve j passed from x to y along the empty side, in
  // path order, traversed with direction bg.dir_fwd.
  bool passed_none = false;
  if (bx == by) {
    int rx = rank_in_arc(o, j, bx, bg.x), ry = rank_in_arc(o, j, by, bg.y);
    passed_none = (bg.dir_fwd == +1) ? (rx < ry) : (rx > ry);
  }
  std::vector<int> passed;
  if (!passed_none) {
    if (bg.dir_fwd == +1)
      for (int k = (bx + 1) % nb;; k = (k + 1) % nb) {
        passed.push_back(k);
        if (k == by) break;
      }
    else
      for (int k = bx;; k = (k - 1 + nb) % nb) {
        passed.push_back(k);
        if (k == (by + 1) % nb) break;
      }
  }
  check_internal(!(kept.empty() && passed.empty()), "bigon removal would erase the curve");

  // New crossing list for curve i: the copies first (the path from x to
  // y), then the kept crossings (continuing after y back around to x).
  std::vector<Crossing> newcross;
  std::vector<int> copy_newidx(nb, -1);
  for (int k : passed) {
    const Crossing& cr = b.crossing(k);
    copy_newidx[k] = static_cast<int>(newcross.size());
    newcross.push_back({cr.edge, bg.dir_fwd * cr.dir});
  }
  std::vector<int> old_newidx(na, -1);
  for (int k : kept) {
    old_newidx[k] = static_cast<int>(newcross.size());
    newcross.push_back(a.crossing(k));
  }

  // New merged orders: drop removed i-points, remap kept ones, insert
  // each copy immediately next to its template j-point.  Along dart +e
  // the left of curve j is the head side exactly when j crosses with
  // dir +1.
  std::vector<std::vector<MergedPoint>> merged(o.surface()->num_edges());
  for (int e = 0; e < o.surface()->num_edges(); ++e) {
    for (const MergedPoint& p : o.merged()[e]) {
      bool insert_copy = (p.curve == j && copy_newidx[p.index] != -1);
      bool after = insert_copy && ((side == 0) == (b.crossing(p.index).dir == +1));
      if (insert_copy && !after) merged[e].push_back({i, copy_newidx[p.index]});
      if (p.curve == i) {
        if (old_newidx[p.index] != -1) merged[e].push_back({i, old_newidx[p.index]});
      } else {
        merged[e].push_back(p);
      }
      if (insert_copy && after) merged[e].push_back({i, copy_newidx[p.index]});
    }
  }

  // Slot order of the new curve i from the merged order.
  std::vector<std::vector<int>> slots(o.surface()->num_edges());
  for (int e = 0; e < o.surface()->num_edges(); ++e)
    for (const MergedPoint& p : merged[e])
      if (p.curve == i) slots[e].push_back(p.index);

  std::vector<CurveDiagram> curves;
  curves.reserve(o.num_curves());
  for (int c = 0; c < o.num_curves(); ++c) {
    if (c == i)
      curves.emplace_back(o.surface(), newcross, slots);
    else
      curves.push_back(o.curve(c));
  }
  return Overlay(o.surface(), std::move(curves), std::move(merged));
}

}  // namespace

Overlay reduce_pair_bigons(Overlay o, int i, int j, const ContractOracle& oracle) {
  require(i != j && i >= 0 && j >= 0 && i < o.num_curves() && j < o.num_curves(),
          "reduce_pair_bigons needs two distinct curves of the overlay");
  for (;;) {
    auto bg = find_empty_bigon(o, i, j, oracle);
    if (!bg) return o;
    int before = o.count_pair(i, j);
    bool done = false;
    for (int side : {0, 1}) {
      Overlay next = remove_bigon(o, i, j, *bg, side);
      if (next.count_pair(i, j) == before - 2) {
        next.validate();
        o = std::move(next);
        done = true;
        break;
      }
    }
    check_internal(done, "bigon removal failed on both sides");
  }
}

Overlay reduce_all_bigons(Overlay o, const ContractOracle& oracle) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < o.num_curves() && !changed; ++i)
      for (int j = i + 1; j < o.num_curves() && !changed; ++j) {
        int before = o.count_pair(i, j);
        o = reduce_pair_bigons(std::move(o), i, j, oracle);
        if (o.count_pair(i, j) != before) changed = true;
      }
  }
  return o;
}

int geometric_intersection(const CurveDiagram& a, const CurveDiagram& b,
                           const ContractOracle& oracle) {
  require(a.surface()->structurally_equal(*b.surface()),
          "geometric_intersection needs curves on the same surface");
  require(diagram_interleavings(a) == 0 && diagram_interleavings(b) == 0,
          "geometric_intersection needs embedded diagrams");
  Overlay o = Overlay::sequential(a.surface(), {a, b});
  o.validate();
  o = reduce_pair_bigons(std::move(o), 0, 1, oracle);
  return o.count_pair(0, 1);
}

long long algebraic_intersection(const CurveDiagram& a, const CurveDiagram& b) {
  require(a.surface()->structurally_equal(*b.surface()),
          "algebraic_intersection needs curves on the same surface");
  Overlay o = Overlay::sequential(a.surface(), {a, b});
  return o.signed_sum(0, 1);
}

std::vector<long long> homology_class(const CurveDiagram& c) {
  require(c.surface()->num_vertices() == 1,
          "homology coordinates need a one-vertex surface");
  return c.signed_edge_vector();
}

namespace {

// Minimal interleaving count over slot assignments realizing the given
// crossing word on a one-vertex, one-face surface.  Branch and bound
// over insertion positions; the relative order of placed points never
// changes when later points are inserted.
int min_word_interleavings(const SurfacePtr& s, const Word& w, int best) {
  const int n = static_cast<int>(w.size());
  std::vector<Crossing> cross(n);
  for (int k = 0; k < n; ++k) cross[k] = {std::abs(w[k]) - 1, w[k] > 0 ? +1 : -1};
  std::vector<std::vector<int>> order(s->num_edges());  // placed crossings, +e order

  const auto& cyc = s->faces()[0];
  auto position_of = [&](int k, Dart d) {
    int cnt = 0;
    for (Dart fd : cyc) {
      const auto& pts = order[fd.edge()];
      if (fd.sign() > 0) {
        for (int p : pts) {
          if (p == k && fd == d) return cnt;
          ++cnt;
        }
      } else {
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
          if (*it == k && fd == d) return cnt;
          ++cnt;
        }
      }
    }
    check_internal(false, "unplaced point queried");
    return -1;
  };
  auto enter = [&](int k) { return Dart::make(cross[k].edge, -cross[k].dir); };
  auto exit = [&](int k) { return Dart::make(cross[k].edge, cross[k].dir); };
  // Interleavings of the chord of arc (j -> j+1 mod n) against the
  // chords of all earlier (complete) arcs.
  auto arc_crossings = [&](int arc) {
    int p1 = position_of(arc, enter(arc));
    int q1 = position_of((arc + 1) % n, exit((arc + 1) % n));
    int total = 0;
    for (int prev = 0; prev < arc; ++prev) {
      int p2 = position_of(prev, enter(prev));
      int q2 = position_of((prev + 1) % n, exit((prev + 1) % n));
      if (detail::chords_interleave(p1, q1, p2, q2)) ++total;
    }
    return total;
  };

  int bound = best;
  std::function<void(int, int)> place = [&](int k, int acc) {
    if (acc >= bound) return;
    if (k == n) {
      int total = acc + arc_crossings(n - 1);
      if (total < bound) bound = total;
      return;
    }
    auto& lst = order[cross[k].edge];
    for (size_t p = 0; p <= lst.size(); ++p) {
      lst.insert(lst.begin() + p, k);
      int add = (k >= 1) ? arc_crossings(k - 1) : 0;
      place(k + 1, acc + add);
      lst.erase(lst.begin() + p);
    }
  };
  place(0, 0);
  return bound;
}

}  // namespace

int self_intersection(const CurveDiagram& c, const ContractOracle& oracle) {
  if (diagram_interleavings(c) == 0) return 0;
  const SurfacePtr& s = c.surface();
  require(s->num_vertices() == 1 && s->num_faces() == 1,
          "self_intersection of non-embedded diagrams needs a one-vertex surface");
  Word w = oracle.project(c.crossing_word());
  int best = diagram_interleavings(c);
  for (const Word& g : oracle.pres->geodesic_class(w))
    best = min_word_interleavings(s, g, best);
  return best;
}

}  // namespace surfcc

#include <algorithm>
#include <numeric>

#include "surfcc/curve.hpp"

namespace surfcc {

namespace {

Dart next_in_face(const PolySurface& s, Dart d) {
  const auto& cyc = s.faces()[s.face_of(d)];
  return cyc[(s.pos_in_face(d) + 1) % cyc.size()];
}

// Whether the occurrence of point k on dart d is the first / last one
// met when walking along d (dart +e walks slots upward, -e downward).
bool is_first_on_dart(const CurveDiagram& c, int k, Dart d) {
  int m = static_cast<int>(c.slots_on_edge(d.edge()).size());
  return d.sign() > 0 ? c.rank_of(k) == 0 : c.rank_of(k) == m - 1;
}
bool is_last_on_dart(const CurveDiagram& c, int k, Dart d) {
  int m = static_cast<int>(c.slots_on_edge(d.edge()).size());
  return d.sign() > 0 ? c.rank_of(k) == m - 1 : c.rank_of(k) == 0;
}

// Rebuild a diagram with the crossings in `removed` deleted and, right
// after old crossing `after`, the crossings `added` inserted; each added
// crossing carries a flag telling whether its point goes to the front
// or the back of its edge's slot order.
struct AddedCrossing {
  Crossing crossing;
  bool at_front;
};

CurveDiagram rebuild(const CurveDiagram& c, const std::vector<bool>& removed, int after,
                     const std::vector<AddedCrossing>& added) {
  const int n = c.size();
  std::vector<Crossing> crossings;
  std::vector<int> new_index(n, -1);
  // Keep the surviving old crossings in cyclic order starting just
  // past the insertion point, then append the new run (which follows
  // old crossing `after`).
  int start = (after + 1) % n;
  for (int i = 0; i < n; ++i) {
    int k = (start + i) % n;
    if (removed[k]) continue;
    new_index[k] = static_cast<int>(crossings.size());
    crossings.push_back(c.crossing(k));
  }
  std::vector<int> added_index;
  for (const AddedCrossing& a : added) {
    added_index.push_back(static_cast<int>(crossings.size()));
    crossings.push_back(a.crossing);
  }
  std::vector<std::vector<int>> slots(c.surface()->num_edges());
  for (int e = 0; e < c.surface()->num_edges(); ++e)
    for (int k : c.slots_on_edge(e))
      if (!removed[k]) slots[e].push_back(new_index[k]);
  for (size_t i = 0; i < added.size(); ++i) {
    auto& sl = slots[added[i].crossing.edge];
    if (added[i].at_front)
      sl.insert(sl.begin(), added_index[i]);
    else
      sl.push_back(added_index[i]);
  }
  require(!crossings.empty(), "curve is contractible: reduced to the empty diagram");
  return CurveDiagram(c.surface(), std::move(crossings), std::move(slots));
}

// An innermost spur: crossings k, k+1 pass through the same edge in
// opposite directions at adjacent slots, so the arc between them cuts
// off an empty bigon with the edge and both crossings cancel.
bool try_spur(const CurveDiagram& c, CurveDiagram* out) {
  const int n = c.size();
  for (int k = 0; k < n; ++k) {
    int k2 = (k + 1) % n;
    if (k2 == k) continue;
    const Crossing &x = c.crossing(k), &y = c.crossing(k2);
    if (x.edge != y.edge || x.dir != -y.dir) continue;
    if (std::abs(c.rank_of(k) - c.rank_of(k2)) != 1) continue;
    std::vector<bool> removed(n, false);
    removed[k] = removed[k2] = true;
    *out = rebuild(c, removed, (k + n - 1) % n, {});
    return true;
  }
  return false;
}

// Corners cut by arc j (the arc from crossing j to crossing j+1),
// identified by the dart whose head is the corner.  An arc cuts a
// corner when its two endpoints are the nearest points to that corner
// on the two adjacent face-boundary darts.
std::vector<Dart> corners_cut(const CurveDiagram& c, int j) {
  const PolySurface& s = *c.surface();
  const int n = c.size();
  int j2 = (j + 1) % n;
  Dart P = c.enter_dart(j);
  Dart Q = c.exit_dart(j2);
  std::vector<Dart> out;
  if (next_in_face(s, P) == Q && is_last_on_dart(c, j, P) && is_first_on_dart(c, j2, Q))
    out.push_back(P);
  if (next_in_face(s, Q) == P && is_first_on_dart(c, j, P) && is_last_on_dart(c, j2, Q))
    out.push_back(Q);
  return out;
}

// A fan: consecutive arcs j .. j+p-1 cutting p rotation-consecutive
// corners around one vertex, entered and left through the two flanking
// edge-ends.  When the p+1 crossings are more than half the vertex
// valence, pushing the strand across the vertex replaces them by the
// valence-(p+1) crossings through the complementary edge-ends,
// traversed in the opposite rotation sense, each inserted at the
// extreme slot nearest the vertex.
bool try_fan(const CurveDiagram& c, CurveDiagram* out) {
  const PolySurface& s = *c.surface();
  const int n = c.size();
  std::vector<std::vector<Dart>> cuts(n);
  for (int j = 0; j < n; ++j) cuts[j] = corners_cut(c, j);

  for (int j = 0; j < n; ++j) {
    for (Dart first : cuts[j]) {
      int v = s.vertex_at_head(first);
      const auto& corners = s.vertex_corners()[v];
      const int val = static_cast<int>(corners.size());
      auto corner_pos = [&](Dart d) {
        for (int t = 0; t < val; ++t)
          if (corners[t] == d) return t;
        check_internal(false, "corner not found at its vertex");
        return -1;
      };
      auto end_at = [&](int t) { return next_in_face(s, corners[((t % val) + val) % val]); };
      int q = corner_pos(first);
      for (int dirR : {+1, -1}) {
        // Grow the chain of arcs j, j+1, ... whose corners march around
        // v in rotation direction dirR.
        int p = 1;
        while (p < n) {
          int next_arc = (j + p) % n;
          Dart want = corners[((q + p * dirR) % val + val) % val];
          if (std::find(cuts[next_arc].begin(), cuts[next_arc].end(), want) ==
              cuts[next_arc].end())
            break;
          ++p;
        }
        if (p >= n)
          throw PreconditionError("curve is contractible: it bounds a disk around a vertex");
        if (2 * (p + 1) <= val) continue;

        // Crossed ends, in arc order, and the sanity checks tying the
        // diagram to the rotation combinatorics.
        bool ok = true;
        for (int i = 0; i <= p && ok; ++i) {
          int t = (dirR == +1) ? q - 1 + i : q - i;
          Dart end = end_at(t);
          const Crossing& x = c.crossing((j + i) % n);
          if (x.edge != end.edge() || x.dir != dirR * end.sign()) ok = false;
        }
        check_internal(ok, "fan chain inconsistent with vertex rotation");

        std::vector<AddedCrossing> added;
        for (int i = 0; i <= val - p - 2; ++i) {
          int u = (dirR == +1) ? q - 2 - i : q + 1 + i;
          Dart end = end_at(u);
          // Travelling in rotation sense -dirR now; the new point sits
          // nearest the vertex end of its edge.
          added.push_back({{end.edge(), -dirR * end.sign()}, end.sign() > 0});
        }
        std::vector<bool> removed(n, false);
        for (int i = 0; i <= p; ++i) removed[(j + i) % n] = true;
        *out = rebuild(c, removed, (j + n - 1) % n, added);
        return true;
      }
    }
  }
  return false;
}

// Balanced cyclic word for the primitive torus class with signed edge
// multiplicities (sa, sb): the crossing word of the embedded straight
// curve, letters distributed as evenly as possible.
Word balanced_torus_word(long long sa, long long sb) {
  long long na = std::llabs(sa), nb = std::llabs(sb);
  Word w;
  long long total = na + nb;
  long long placed_a = 0;
  for (long long i = 0; i < total; ++i) {
    if (placed_a * total < na * (i + 1) && placed_a < na) {
      w.push_back(sa > 0 ? 1 : -1);
      ++placed_a;
    } else {
      w.push_back(sb > 0 ? 2 : -2);
    }
  }
  return w;
}

}  // namespace

CurveDiagram normalize(const CurveDiagram& c) {
  const SurfacePtr& s = c.surface();
  bool expect_simple = diagram_interleavings(c) == 0;
  CurveDiagram cur = c;
  while (true) {
    CurveDiagram next = cur;
    if (try_spur(cur, &next) || try_fan(cur, &next)) {
      cur = next;
      continue;
    }
    break;
  }
  if (s->num_vertices() != 1) return cur;  // covers: move-reduced only

  DualPresentation pres(*s);
  Word word = cur.crossing_word();
  std::vector<Word> geodesics;
  if (s->genus() == 1) {
    auto y = cur.signed_edge_vector();
    require(y[0] != 0 || y[1] != 0, "curve is contractible (null-homologous on the torus)");
    if (expect_simple) {
      require(std::gcd(std::llabs(y[0]), std::llabs(y[1])) == 1,
              "embedded torus curve must have primitive homology class");
      geodesics = {balanced_torus_word(y[0], y[1])};
    } else {
      geodesics = pres.geodesic_class(word);
    }
  } else {
    require(!pres.is_trivial(word), "curve is contractible");
    geodesics = pres.geodesic_class(word);
  }
  check_internal(!geodesics.empty() && !geodesics.front().empty(),
                 "essential curve produced an empty geodesic");

  bool taut = static_cast<int>(geodesics.front().size()) == cur.size();
  bool still_embedded = !expect_simple || diagram_interleavings(cur) == 0;
  if (taut && still_embedded) return cur;

  // The local moves stalled short of the geodesic (or broke
  // embeddedness, which they should not); re-embed a geodesic
  // representative from scratch.
  check_internal(expect_simple, "normalize: moves stalled on a non-embedded diagram");
  for (const Word& g : geodesics)
    if (auto emb = embed_word(s, g)) return *emb;
  check_internal(false, "no geodesic representative of an embedded curve could be re-embedded");
  return cur;
}

std::optional<CurveDiagram> embed_word(const SurfacePtr& s, const Word& word) {
  const int n = static_cast<int>(word.size());
  require(n >= 1, "embed_word needs a nonempty word");
  std::vector<Crossing> crossings(n);
  for (int k = 0; k < n; ++k) {
    int e = std::abs(word[k]) - 1;
    require(e >= 0 && e < s->num_edges(), "embed_word: letter out of range");
    crossings[k] = {e, word[k] > 0 ? +1 : -1};
  }
  auto enter = [&](int k) { return Dart::make(crossings[k].edge, -crossings[k].dir); };
  auto exit = [&](int k) { return Dart::make(crossings[k].edge, crossings[k].dir); };
  for (int k = 0; k < n; ++k)
    if (s->face_of(enter(k)) != s->face_of(exit((k + 1) % n))) return std::nullopt;

  std::vector<std::vector<int>> order(s->num_edges());  // partial slot orders

  // Boundary position of placed point k on dart d within its face,
  // counting only placed points.
  auto position_of = [&](int k, Dart d) {
    int pos = 0;
    for (Dart fd : s->faces()[s->face_of(d)]) {
      const auto& sl = order[fd.edge()];
      if (fd.sign() > 0) {
        for (int x : sl) {
          if (fd == d && x == k) return pos;
          ++pos;
        }
      } else {
        for (auto it = sl.rbegin(); it != sl.rend(); ++it) {
          if (fd == d && *it == k) return pos;
          ++pos;
        }
      }
    }
    check_internal(false, "embed_word: placed point not found on face boundary");
    return -1;
  };

  // Arcs 0..upto-1 are fully placed; the newest one must not interleave
  // with any earlier arc in its face.
  auto newest_arc_ok = [&](int upto) {
    int j = upto - 1;
    int j2 = (j + 1) % n;
    int f = s->face_of(enter(j));
    int a1 = position_of(j, enter(j));
    int a2 = position_of(j2, exit(j2));
    for (int i = 0; i < j; ++i) {
      int i2 = (i + 1) % n;
      if (s->face_of(enter(i)) != f) continue;
      int b1 = position_of(i, enter(i));
      int b2 = position_of(i2, exit(i2));
      if (detail::chords_interleave(a1, a2, b1, b2)) return false;
    }
    return true;
  };

  std::optional<CurveDiagram> result;
  auto place = [&](auto&& self, int k) -> bool {
    if (k == n) {
      if (n >= 2 && !newest_arc_ok(n)) return false;
      result = CurveDiagram(s, crossings, order);
      return true;
    }
    auto& sl = order[crossings[k].edge];
    for (size_t pos = 0; pos <= sl.size(); ++pos) {
      sl.insert(sl.begin() + pos, k);
      bool ok = (k == 0) || newest_arc_ok(k);
      if (ok && self(self, k + 1)) return true;
      sl.erase(sl.begin() + pos);
    }
    return false;
  };
  place(place, 0);
  return result;
}

}  // namespace surfcc

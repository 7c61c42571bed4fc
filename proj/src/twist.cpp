#include "surfcc/twist.hpp"

#include <algorithm>
#include <cstdlib>

namespace surfcc {

// The twisted curve is built from the annulus-shear picture.  Put the
// target (alpha) and the twister (beta) in minimal joint position and
// thicken beta to an annulus; the right twist shears every strand of
// alpha crossing the annulus by n full loops in beta's direction.  A
// strand entering from the left of beta (crossing frame +1) sweeps the
// annulus from the left boundary to the right one, a right-entering
// strand the other way; parameterizing the sweep by the number of
// events passed along beta gives every pass of every strand over a
// point of beta an exact distinct "height", and sorting each cluster
// by height yields the slot order of an embedded result.
CurveDiagram dehn_twist(const CurveDiagram& target, const CurveDiagram& twister, int n,
                        const ContractOracle& oracle) {
  require(diagram_interleavings(twister) == 0, "dehn_twist: twister must be simple");
  require(diagram_interleavings(target) == 0, "dehn_twist: target must be simple");
  require(target.surface()->structurally_equal(*twister.surface()),
          "dehn_twist: curves on different surfaces");

  CurveDiagram alpha = normalize(target);
  if (n == 0) return alpha;
  CurveDiagram beta = normalize(twister);
  Overlay o = reduce_pair_bigons(
      Overlay::sequential(alpha.surface(), {alpha, beta}), 0, 1, oracle);
  const CurveDiagram& a = o.curve(0);
  const CurveDiagram& b = o.curve(1);
  const int k = o.count_pair(0, 1);
  if (k == 0) return normalize(o.curve(0));

  // Events along beta: its crossings interleaved with the
  // intersections, in cyclic order (along(1) concatenates the per-arc
  // intersection orders).
  struct Event {
    bool is_isect;
    int id;
  };
  std::vector<Event> ev;
  std::vector<int> idx_cross(b.size(), -1);
  std::vector<int> idx_isect(o.isects().size(), -1);
  {
    size_t t = 0;
    const auto& along_b = o.along(1);
    for (int j = 0; j < b.size(); ++j) {
      idx_cross[j] = static_cast<int>(ev.size());
      ev.push_back({false, j});
      while (t < along_b.size()) {
        const Overlay::Isect& is = o.isects()[along_b[t]];
        int arc = (is.ca == 1) ? is.arc_a : is.arc_b;
        if (arc != j) break;
        idx_isect[along_b[t]] = static_cast<int>(ev.size());
        ev.push_back({true, along_b[t]});
        ++t;
      }
    }
    check_internal(t == along_b.size(), "intersection events out of arc order");
  }
  const int L = static_cast<int>(ev.size());

  // Walk alpha, splicing the spiral at every intersection.
  struct NewPoint {
    Crossing cr;
    int cluster = -1;  // beta crossing index, or -1 for alpha's own points
    int alpha_point = -1;
    long long height = 0;  // order within the cluster, toward the left of beta
  };
  std::vector<NewPoint> pts;
  const auto& along_a = o.along(0);
  size_t t = 0;
  for (int j = 0; j < a.size(); ++j) {
    pts.push_back({a.crossing(j), -1, j, 0});
    while (t < along_a.size()) {
      const Overlay::Isect& is = o.isects()[along_a[t]];
      int arc = (is.ca == 0) ? is.arc_a : is.arc_b;
      if (arc != j) break;
      int s = is.sign;  // frame (alpha, beta); +1 = alpha enters from beta's left
      int eps = (n > 0 ? +1 : -1) * s;
      long long total = static_cast<long long>(std::abs(n)) * L;
      int pos = idx_isect[along_a[t]];
      for (long long step = 1; step <= total; ++step) {
        pos = (pos + eps + L) % L;
        if (ev[pos].is_isect) continue;
        int bt = ev[pos].id;
        const Crossing& bc = b.crossing(bt);
        long long h = (s == +1) ? total - step : step;
        pts.push_back({{bc.edge, eps * bc.dir}, bt, -1, h});
      }
      check_internal(pos == idx_isect[along_a[t]], "spiral did not close up");
      ++t;
    }
  }
  check_internal(t == along_a.size(), "intersection events out of arc order");

  // Slot orders: walk the joint merged order; alpha points keep their
  // position, each beta point is replaced by its cluster sorted by
  // height (ascending toward the left of beta, which along dart +e is
  // the head side exactly when beta crosses with dir +1).
  std::vector<int> alpha_newidx(a.size(), -1);
  std::vector<std::vector<std::pair<long long, int>>> cluster(b.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (pts[i].cluster == -1)
      alpha_newidx[pts[i].alpha_point] = i;
    else
      cluster[pts[i].cluster].push_back({pts[i].height, i});
  }
  for (auto& cl : cluster) {
    std::sort(cl.begin(), cl.end());
    for (size_t u = 0; u + 1 < cl.size(); ++u)
      check_internal(cl[u].first != cl[u + 1].first, "strand heights collide");
  }

  const SurfacePtr& s = a.surface();
  std::vector<std::vector<int>> slots(s->num_edges());
  for (int e = 0; e < s->num_edges(); ++e)
    for (const MergedPoint& p : o.merged()[e]) {
      if (p.curve == 0) {
        slots[e].push_back(alpha_newidx[p.index]);
      } else {
        const auto& cl = cluster[p.index];
        if (b.crossing(p.index).dir == +1)
          for (const auto& [h, i] : cl) slots[e].push_back(i);
        else
          for (auto it = cl.rbegin(); it != cl.rend(); ++it) slots[e].push_back(it->second);
      }
    }

  std::vector<Crossing> crossings;
  crossings.reserve(pts.size());
  for (const NewPoint& p : pts) crossings.push_back(p.cr);
  CurveDiagram result(s, std::move(crossings), std::move(slots));
  check_internal(diagram_interleavings(result) == 0,
                 "twisted diagram is not embedded");
  return normalize(result);
}

CurveDiagram apply_twist_word(const TwistWord& w, CurveDiagram c,
                              const ContractOracle& oracle) {
  for (const TwistFactor& f : w) {
    require(f.power != 0, "twist word powers must be nonzero");
    c = dehn_twist(c, f.curve, f.power, oracle);
  }
  return c;
}

TwistWord inverse_twist_word(TwistWord w) {
  std::reverse(w.begin(), w.end());
  for (TwistFactor& f : w) f.power = -f.power;
  return w;
}

}  // namespace surfcc

#include "surfcc/handlebody.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace surfcc {

namespace {

std::vector<std::string> default_names(int g) {
  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// Number of connected components of Sigma minus the multicurve, after
// putting the components in minimal joint position.
int complement_components(const SurfacePtr& s, const Multicurve& m,
                          const ContractOracle& oracle) {
  std::vector<CurveDiagram> curves = m;
  curves.push_back(edge_dual(s, 0));  // probe; any curve works
  Overlay o = reduce_all_bigons(Overlay::sequential(s, curves), oracle);
  std::vector<int> cuts;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) cuts.push_back(i);
  return o.itinerary(static_cast<int>(m.size()), cuts).num_regions;
}

}  // namespace

namespace detail {

std::optional<CurveDiagram> embed_class(const SurfacePtr& s, const DualPresentation& pres,
                                        const Word& w) {
  for (const Word& g : pres.geodesic_class(w))
    if (auto d = embed_word(s, g)) return d;
  return std::nullopt;
}

}  // namespace detail

HandlebodyStructure standard_handlebody(int g) {
  require(g >= 1, "handlebody genus must be at least 1");
  SurfacePtr s = standard_surface(g);
  Multicurve disks;
  for (int i = 0; i < g; ++i) disks.push_back(edge_dual(s, 2 * i));
  return {s, std::move(disks), default_names(g), ContractOracle::for_base(s)};
}

HandlebodyStructure make_handlebody(SurfacePtr s, Multicurve disk_system,
                                    ContractOracle oracle) {
  const int g = s->genus();
  require(g >= 1, "handlebody genus must be at least 1");
  require(static_cast<int>(disk_system.size()) == g,
          "disk system must have one component per genus");
  for (const CurveDiagram& d : disk_system) {
    require(d.surface()->structurally_equal(*s), "disk component on wrong surface");
    require(diagram_interleavings(d) == 0, "disk component must be simple");
  }
  for (size_t i = 0; i < disk_system.size(); ++i)
    for (size_t j = i + 1; j < disk_system.size(); ++j)
      require(geometric_intersection(disk_system[i], disk_system[j], oracle) == 0,
              "disk components must be pairwise disjoint");
  require(complement_components(s, disk_system, oracle) == 1,
          "disk system complement must be connected");
  return {std::move(s), std::move(disk_system), default_names(g), std::move(oracle)};
}

HandlebodyStructure make_handlebody(SurfacePtr s, Multicurve disk_system) {
  ContractOracle oracle = ContractOracle::for_base(s);
  return make_handlebody(std::move(s), std::move(disk_system), std::move(oracle));
}

Word handlebody_word(const HandlebodyStructure& H, const CurveDiagram& c) {
  require(c.surface()->structurally_equal(*H.surface), "curve on wrong surface");
  const int g = H.genus();
  std::vector<CurveDiagram> curves = H.disk_system;
  curves.push_back(c);
  Overlay o = Overlay::sequential(H.surface, curves);
  Word w;
  for (int id : o.along(g)) {
    const Overlay::Isect& is = o.isects()[id];
    // ca < cb = g, so ca names the disk and sign is frame(disk, c).
    w.push_back(is.sign * (is.ca + 1));
  }
  return cyclic_reduce(std::move(w));
}

bool is_meridian(const HandlebodyStructure& H, const CurveDiagram& c) {
  require(diagram_interleavings(c) == 0, "is_meridian requires a simple curve");
  return handlebody_word(H, c).empty();
}

std::optional<Wave> find_wave(const Multicurve& A, const Multicurve& B,
                              const HandlebodyStructure& H) {
  require(H.surface->num_vertices() == 1, "find_wave requires a one-vertex surface");
  require(!A.empty() && !B.empty(), "find_wave requires nonempty multicurves");
  for (const CurveDiagram& c : A)
    require(is_meridian(H, c), "component of A is not a meridian");
  for (const CurveDiagram& c : B)
    require(is_meridian(H, c), "component of B is not a meridian");

  const int nA = static_cast<int>(A.size()), nB = static_cast<int>(B.size());
  std::vector<CurveDiagram> curves;
  for (const CurveDiagram& c : A) curves.push_back(normalize(c));
  for (const CurveDiagram& c : B) curves.push_back(normalize(c));
  // Position each multicurve disjointly on its own first (reduction
  // with no third-curve obstacles cannot get stuck), then overlay the
  // two positioned families.  Empty-bigon removal across the families
  // is supported away from the other curves, so the intra-family
  // disjointness survives the joint reduction.
  const int E = H.surface->num_edges();
  auto position = [&](std::vector<CurveDiagram> family,
                      const char* who) -> Overlay {
    Overlay o = reduce_all_bigons(Overlay::sequential(H.surface, family), H.oracle);
    int n = o.num_curves();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        require(o.count_pair(i, j) == 0,
                std::string("components of ") + who + " must be pairwise disjoint");
    return o;
  };
  Overlay oa = position({curves.begin(), curves.begin() + nA}, "A");
  Overlay ob = position({curves.begin() + nA, curves.end()}, "B");
  std::vector<CurveDiagram> placed;
  for (int i = 0; i < nA; ++i) placed.push_back(oa.curve(i));
  for (int i = 0; i < nB; ++i) placed.push_back(ob.curve(i));
  std::vector<std::vector<MergedPoint>> merged(E);
  for (int e = 0; e < E; ++e) {
    merged[e] = oa.merged()[e];
    for (const MergedPoint& p : ob.merged()[e])
      merged[e].push_back({p.curve + nA, p.index});
  }
  Overlay o = reduce_all_bigons(Overlay(H.surface, placed, merged), H.oracle);
  for (int i = 0; i < nA + nB; ++i)
    for (int j = i + 1; j < nA + nB; ++j)
      if ((i < nA) == (j < nA))
        check_internal(o.count_pair(i, j) == 0,
                       "joint reduction broke intra-family disjointness");

  bool crossing = false;
  for (int i = 0; i < nA; ++i)
    if (!o.along(i).empty()) crossing = true;
  if (!crossing) return std::nullopt;

  const DualPresentation& pres = *H.oracle.pres;
  for (const detail::WaveShape& ws : detail::wave_shapes(o, nA, nB)) {
    int x = o.along(ws.host)[ws.start], y = o.along(ws.host)[ws.end];
    Word wa = o.subarc_word(ws.host, x, y, +1);
    for (int dirb : {+1, -1}) {
      Word wb = o.subarc_word(nA + ws.hit_component, y, x, dirb);
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      if (pres.geodesic_cyclic(w).empty()) continue;  // inessential loop
      auto surg = detail::embed_class(H.surface, pres, w);
      if (!surg) continue;
      if (!is_meridian(H, *surg)) continue;
      return Wave{ws.host, ws.start, ws.end, ws.hit_component, ws.side, std::move(*surg)};
    }
  }
  check_internal(false, "intersecting meridian multicurves admit no wave");
  return std::nullopt;  // unreachable
}

namespace detail {

std::vector<WaveShape> wave_shapes(const Overlay& o, int nA, int nB) {
  (void)nB;
  std::vector<WaveShape> out;
  for (int ai = 0; ai < nA; ++ai) {
    const std::vector<int>& along = o.along(ai);
    const int L = static_cast<int>(along.size());
    for (int t = 0; t < L; ++t) {
      int x = along[t], y = along[(t + 1) % L];
      const Overlay::Isect& ix = o.isects()[x];
      const Overlay::Isect& iy = o.isects()[y];
      if (ix.cb != iy.cb) continue;       // endpoints on different B components
      if (ix.sign != -iy.sign) continue;  // opposite sides of the component
      // Opposite isect signs mean the subarc leaves and returns on one
      // side of the hit component: a wave shape.
      int side = (ix.sign == -1) ? +1 : -1;
      out.push_back({ai, t, (t + 1) % L, ix.cb - nA, side});
    }
  }
  return out;
}

}  // namespace detail

ExtensionVerdict check_multitwist(const HandlebodyStructure& H, const TwistWord& spec) {
  const int n = static_cast<int>(spec.size());
  for (const TwistFactor& f : spec) {
    require(f.power != 0, "twist powers must be nonzero");
    require(diagram_interleavings(f.curve) == 0, "twist factors must be simple");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(geometric_intersection(spec[i].curve, spec[j].curve, H.oracle) == 0,
              "twist factors must be pairwise disjoint");

  std::vector<int> nonmer;
  for (int i = 0; i < n; ++i)
    if (!is_meridian(H, spec[i].curve)) nonmer.push_back(i);

  bool uniform = true;
  for (int i = 1; i < n; ++i)
    if ((spec[i].power > 0) != (spec[0].power > 0)) uniform = false;

  if (nonmer.empty()) return {ExtensionVerdict::Kind::AllMeridian, {}, -1, ""};
  if (uniform)
    return {ExtensionVerdict::Kind::Obstructed,
            {},
            nonmer[0],
            "non-meridian factor with uniform twist sign"};
  if (nonmer.size() % 2 != 0)
    return {ExtensionVerdict::Kind::Obstructed,
            {},
            -1,
            "odd number of non-meridian factors: annulus twist curves come in pairs"};

  // Perfect matching of the non-meridian factors into annulus
  // candidates: opposite twist signs and conjugate (up to inversion)
  // handlebody words.  Disjointness already holds for all factors.
  std::vector<Word> words;
  for (int i : nonmer) words.push_back(handlebody_word(H, spec[i].curve));
  const int m = static_cast<int>(nonmer.size());
  std::vector<bool> used(m, false);
  std::vector<std::pair<int, int>> pairs;
  auto match = [&](auto&& self) -> bool {
    int i = 0;
    while (i < m && used[i]) ++i;
    if (i == m) return true;
    used[i] = true;
    for (int j = i + 1; j < m; ++j) {
      if (used[j]) continue;
      if ((spec[nonmer[i]].power > 0) == (spec[nonmer[j]].power > 0)) continue;
      if (!conjugate_up_to_inversion_free(words[i], words[j])) continue;
      used[j] = true;
      pairs.emplace_back(nonmer[i], nonmer[j]);
      if (self(self)) return true;
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
    return false;
  };
  if (match(match))
    return {ExtensionVerdict::Kind::PairedCandidate, pairs, -1,
            "necessary conditions only: disjoint, conjugate words, opposite signs"};
  return {ExtensionVerdict::Kind::Obstructed,
          {},
          nonmer[0],
          "non-meridian factor with no admissible annulus partner"};
}

bool is_reduced_disk_system(const HandlebodyStructure& H, const Multicurve& m) {
  require(static_cast<int>(m.size()) == H.genus(),
          "disk system must have one component per genus");
  for (const CurveDiagram& c : m) {
    if (diagram_interleavings(c) != 0) return false;
    if (!is_meridian(H, c)) return false;
  }
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (geometric_intersection(m[i], m[j], H.oracle) != 0) return false;
  return complement_components(H.surface, m, H.oracle) == 1;
}

namespace {

using SystemKey = std::vector<Word>;

SystemKey system_key(const HandlebodyStructure& H, const Multicurve& m) {
  SystemKey k;
  for (const CurveDiagram& c : m)
    k.push_back(H.oracle.pres->conjugacy_canonical(c.crossing_word(), true));
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

std::optional<std::vector<Multicurve>> disk_exchange_path(const HandlebodyStructure& H,
                                                          const Multicurve& C,
                                                          const Multicurve& C2, int bound) {
  require(is_reduced_disk_system(H, C), "endpoint C is not a reduced disk system");
  require(is_reduced_disk_system(H, C2), "endpoint C' is not a reduced disk system");
  const int g = H.genus();

  SystemKey goal = system_key(H, C2);
  if (system_key(H, C) == goal) return std::vector<Multicurve>{C};

  // Candidate replacement disks: every enumerated meridian within the
  // crossing bound.  Wave surgeries against C' are appended on demand.
  std::vector<CurveDiagram> pool;
  for (const CurveDiagram& c : enumerate_curves(H.surface, bound))
    if (is_meridian(H, c)) pool.push_back(c);

  // Pairwise intersection cache keyed by canonical words.
  std::map<std::pair<Word, Word>, int> icache;
  auto inum = [&](const CurveDiagram& a, const CurveDiagram& b) {
    Word ka = H.oracle.pres->conjugacy_canonical(a.crossing_word(), true);
    Word kb = H.oracle.pres->conjugacy_canonical(b.crossing_word(), true);
    if (kb < ka) std::swap(ka, kb);
    auto it = icache.find({ka, kb});
    if (it != icache.end()) return it->second;
    int v = geometric_intersection(a, b, H.oracle);
    icache.insert({{std::move(ka), std::move(kb)}, v});
    return v;
  };

  std::map<SystemKey, int> visited;  // key -> node id
  std::vector<Multicurve> nodes;
  std::vector<int> parent;
  std::deque<int> queue;
  nodes.push_back(C);
  parent.push_back(-1);
  visited[system_key(H, C)] = 0;
  queue.push_back(0);

  auto finish = [&](int last) {
    std::vector<Multicurve> path;
    for (int v = last; v != -1; v = parent[v]) path.push_back(nodes[v]);
    std::reverse(path.begin(), path.end());
    path.back() = C2;
    return path;
  };

  const size_t node_cap = 20000;
  while (!queue.empty() && nodes.size() < node_cap) {
    int cur = queue.front();
    queue.pop_front();
    const Multicurve S = nodes[cur];

    // Direct hop: C' itself, when fully disjoint from S.
    bool direct = true;
    for (const CurveDiagram& a : S)
      for (const CurveDiagram& b : C2)
        if (inum(a, b) != 0) direct = false;
    if (direct) {
      nodes.push_back(C2);
      parent.push_back(cur);
      return finish(static_cast<int>(nodes.size()) - 1);
    }

    std::vector<CurveDiagram> cands = pool;
    // Wave surgeries toward the goal system.
    for (const auto* pair : {&S, &C2}) {
      const Multicurve& X = *pair;
      const Multicurve& Y = (pair == &S) ? C2 : S;
      bool crossing = false;
      for (const CurveDiagram& a : X)
        for (const CurveDiagram& b : Y)
          if (inum(a, b) != 0) crossing = true;
      if (!crossing) continue;
      if (auto w = find_wave(X, Y, H))
        if (w->surgery.size() <= bound) cands.push_back(w->surgery);
    }

    for (const CurveDiagram& m : cands) {
      bool disjoint = true;
      for (const CurveDiagram& c : S)
        if (inum(m, c) != 0) disjoint = false;
      if (!disjoint) continue;
      for (int i = 0; i < g; ++i) {
        Multicurve T = S;
        T[i] = m;
        SystemKey k = system_key(H, T);
        if (visited.count(k)) continue;
        if (!is_reduced_disk_system(H, T)) continue;
        visited[k] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(T));
        parent.push_back(cur);
        if (k == goal) return finish(static_cast<int>(nodes.size()) - 1);
        queue.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  return std::nullopt;
}

}  // namespace surfcc

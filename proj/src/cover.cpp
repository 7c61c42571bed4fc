#include "surfcc/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace surfcc {

namespace {

std::vector<int> identity_perm(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (int j = 0; j < static_cast<int>(p.size()); ++j) q[p[j]] = j;
  return q;
}

std::vector<int> compose(const std::vector<int>& after, const std::vector<int>& first) {
  std::vector<int> r(first.size());
  for (size_t j = 0; j < first.size(); ++j) r[j] = after[first[j]];
  return r;
}

bool is_perm(const std::vector<int>& p, int d) {
  if (static_cast<int>(p.size()) != d) return false;
  std::vector<bool> seen(d, false);
  for (int x : p) {
    if (x < 0 || x >= d || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

int perm_order(const std::vector<int>& p) {
  std::vector<int> q = p;
  const std::vector<int> id = identity_perm(static_cast<int>(p.size()));
  int k = 1;
  while (q != id) {
    q = compose(p, q);
    ++k;
    check_internal(k <= 1000000, "permutation order runaway");
  }
  return k;
}

}  // namespace

std::vector<int> FiniteGroupRep::image(const Word& w) const {
  std::vector<int> p = identity_perm(degree);
  for (int l : w) {
    int e = std::abs(l) - 1;
    const std::vector<int>& s = perm[e];
    if (l > 0)
      p = compose(s, p);
    else
      p = compose(inverse_perm(s), p);
  }
  return p;
}

void validate_rep(const PolySurface& s, const FiniteGroupRep& rep) {
  require(rep.degree >= 1, "cover degree must be positive");
  require(static_cast<int>(rep.perm.size()) == s.num_edges(),
          "rep needs one permutation per edge");
  for (const auto& p : rep.perm)
    require(is_perm(p, rep.degree), "generator image is not a permutation");
  const std::vector<int> id = identity_perm(rep.degree);
  for (int v = 0; v < s.num_vertices(); ++v)
    require(rep.image(s.vertex_link_word(v)) == id,
            "vertex link word acts nontrivially (branched cover)");
}

FiniteGroupRep hom_from_intersection(const SurfacePtr& s, const CurveDiagram& alpha, int n) {
  require(n >= 2, "modulus must be at least 2");
  require(diagram_interleavings(alpha) == 0, "alpha must be simple");
  require(alpha.surface()->structurally_equal(*s), "alpha on wrong surface");
  std::vector<long long> r(s->num_edges());
  long long g = n;
  for (int e = 0; e < s->num_edges(); ++e) {
    r[e] = ((algebraic_intersection(edge_dual(s, e), alpha) % n) + n) % n;
    g = std::gcd(g, r[e]);
  }
  const int k = static_cast<int>(n / g);  // order of the generated subgroup
  FiniteGroupRep rep;
  rep.degree = k;
  for (int e = 0; e < s->num_edges(); ++e) {
    std::vector<int> p(k);
    int shift = static_cast<int>(r[e] / g) % k;
    for (int j = 0; j < k; ++j) p[j] = (j + shift) % k;
    rep.perm.push_back(std::move(p));
  }
  validate_rep(*s, rep);
  return rep;
}

FiniteCover build_cover(const SurfacePtr& s, FiniteGroupRep rep) {
  validate_rep(*s, rep);
  const int d = rep.degree;
  const int E = s->num_edges();

  // Transitivity: the cover must be connected.
  {
    std::vector<int> comp(d);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (int e = 0; e < E; ++e)
      for (int j = 0; j < d; ++j) comp[find(j)] = find(rep.perm[e][j]);
    for (int j = 1; j < d; ++j)
      require(find(j) == find(0), "disconnected cover (non-transitive rep)");
  }

  std::vector<std::vector<int>> inv;
  for (const auto& p : rep.perm) inv.push_back(inverse_perm(p));

  // Cover edge (e, j) has its +side on sheet j and its -side on sheet
  // perm[e][j]; face copy (f, k) collects +darts at sheet k.
  std::vector<std::vector<Dart>> faces;
  std::vector<std::string> names;
  for (int e = 0; e < E; ++e)
    for (int j = 0; j < d; ++j)
      names.push_back(d == 1 ? s->edge_name(e)
                             : s->edge_name(e) + "." + std::to_string(j));
  for (const auto& f : s->faces())
    for (int k = 0; k < d; ++k) {
      std::vector<Dart> lift;
      for (Dart dd : f) {
        int e = dd.edge();
        if (dd.sign() > 0)
          lift.push_back(Dart::make(e * d + k, +1));
        else
          lift.push_back(Dart::make(e * d + inv[e][k], -1));
      }
      faces.push_back(std::move(lift));
    }
  SurfacePtr total = std::make_shared<PolySurface>(std::move(faces), std::move(names));
  check_internal(total->euler_characteristic() == d * s->euler_characteristic(),
                 "cover Euler characteristic mismatch");

  FiniteCover cover;
  cover.base = s;
  cover.rep = std::move(rep);
  cover.total = total;
  for (int e = 0; e < E; ++e)
    for (int j = 0; j < d; ++j) {
      cover.edge_to_base.push_back(e);
      cover.edge_sheet.push_back(j);
    }

  // Regular iff the generated permutation group has exactly d
  // elements (then the sheet-0 stabilizer is trivial, hence normal).
  {
    std::set<std::vector<int>> group;
    std::vector<std::vector<int>> frontier = {identity_perm(d)};
    group.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& p : frontier)
        for (int e = 0; e < E; ++e)
          for (const auto* gen : {&cover.rep.perm[e], &inv[e]}) {
            std::vector<int> q = compose(*gen, p);
            if (group.insert(q).second) next.push_back(std::move(q));
          }
      frontier = std::move(next);
      check_internal(group.size() <= 1000000, "monodromy group runaway");
    }
    cover.normal = static_cast<int>(group.size()) == d;
  }

  cover.total_oracle = ContractOracle::for_base(s);
  cover.total_oracle.edge_to_base = cover.edge_to_base;
  return cover;
}

std::vector<int> lift_degrees(const FiniteCover& cover, const CurveDiagram& c) {
  require(c.surface()->structurally_equal(*cover.base), "curve not on the base surface");
  std::vector<int> p = cover.rep.image(c.crossing_word());
  std::vector<bool> seen(cover.degree(), false);
  std::vector<int> out;
  for (int j = 0; j < cover.degree(); ++j) {
    if (seen[j]) continue;
    int len = 0, x = j;
    do {
      seen[x] = true;
      x = p[x];
      ++len;
    } while (x != j);
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int lift_degree(const FiniteCover& cover, const CurveDiagram& c) {
  require(c.surface()->structurally_equal(*cover.base), "curve not on the base surface");
  std::vector<int> p = cover.rep.image(c.crossing_word());
  if (cover.normal) return perm_order(p);
  int len = 0, x = 0;
  do {
    x = p[x];
    ++len;
  } while (x != 0);
  return len;
}

std::vector<Elevation> elevate(const FiniteCover& cover, const CurveDiagram& c) {
  require(c.surface()->structurally_equal(*cover.base), "curve not on the base surface");
  require(diagram_interleavings(c) == 0, "elevate requires a simple diagram");
  const int d = cover.degree();
  const int L = c.size();
  std::vector<std::vector<int>> inv;
  for (const auto& p : cover.rep.perm) inv.push_back(inverse_perm(p));

  // Sheet of the arc after one full traversal starting on sheet j.
  auto lap = [&](int j) {
    for (int k = 0; k < L; ++k) {
      const Crossing& cr = c.crossing(k);
      j = (cr.dir > 0) ? cover.rep.perm[cr.edge][j] : inv[cr.edge][j];
    }
    return j;
  };

  std::vector<Elevation> out;
  std::vector<bool> used(d, false);
  for (int j0 = 0; j0 < d; ++j0) {
    if (used[j0]) continue;
    // Orbit of j0 under the full-lap monodromy = one elevation.
    int m = 0;
    for (int j = j0; !(m > 0 && j == j0); j = lap(j)) {
      used[j] = true;
      ++m;
    }
    std::vector<Crossing> crossings;
    std::vector<std::vector<std::pair<int, int>>> on_edge(cover.total->num_edges());
    int j = j0;
    for (int t = 0; t < m; ++t)
      for (int k = 0; k < L; ++k) {
        const Crossing& cr = c.crossing(k);
        int before = j;
        j = (cr.dir > 0) ? cover.rep.perm[cr.edge][j] : inv[cr.edge][j];
        int sheet = (cr.dir > 0) ? before : j;  // sheet of the +side
        int E = cover.cover_edge(cr.edge, sheet);
        on_edge[E].push_back({c.rank_of(k), static_cast<int>(crossings.size())});
        crossings.push_back({E, cr.dir});
      }
    check_internal(j == j0, "elevation did not close up");
    std::vector<std::vector<int>> slots(cover.total->num_edges());
    for (int E = 0; E < cover.total->num_edges(); ++E) {
      std::sort(on_edge[E].begin(), on_edge[E].end());
      for (auto& [rank, idx] : on_edge[E]) slots[E].push_back(idx);
    }
    CurveDiagram diag(cover.total, std::move(crossings), std::move(slots));
    check_internal(diagram_interleavings(diag) == 0, "elevation diagram not embedded");
    out.push_back({std::move(diag), m, j0});
  }
  int sum = 0;
  for (const Elevation& e : out) sum += e.degree;
  check_internal(sum == d, "elevation degrees do not sum to the cover degree");
  return out;
}

ExtensionCertificate extends_to_handlebody_cover(const FiniteCover& cover,
                                                 const HandlebodyStructure& H) {
  require(H.surface->structurally_equal(*cover.base),
          "handlebody not on the base surface");
  ExtensionCertificate cert;
  cert.extends = true;
  const std::vector<int> id = identity_perm(cover.degree());
  for (size_t i = 0; i < H.disk_system.size(); ++i) {
    std::vector<int> img = cover.rep.image(H.disk_system[i].crossing_word());
    if (img != id && cert.extends) {
      cert.extends = false;
      cert.witness = static_cast<int>(i);
    }
    cert.images.push_back(std::move(img));
  }
  return cert;
}

FiniteCover quotient_cover(const FiniteCover& cover,
                           const std::vector<std::vector<int>>& normal_subgroup) {
  const int d = cover.degree();
  std::set<std::vector<int>> N(normal_subgroup.begin(), normal_subgroup.end());
  N.insert(identity_perm(d));
  for (const auto& p : N) {
    require(is_perm(p, d), "subgroup element is not a sheet permutation");
    require(N.count(inverse_perm(p)) == 1, "subgroup not closed under inverse");
    for (const auto& q : N)
      require(N.count(compose(p, q)) == 1, "subgroup not closed under composition");
  }
  for (const auto& g : cover.rep.perm) {
    const std::vector<int> ginv = inverse_perm(g);
    for (const auto& p : N)
      require(N.count(compose(g, compose(p, ginv))) == 1,
              "subgroup not normal in the image");
  }

  // Sheets of the quotient are the orbits of N.
  std::vector<int> block(d, -1);
  int nblocks = 0;
  for (int j = 0; j < d; ++j) {
    if (block[j] != -1) continue;
    for (const auto& p : N)
      if (block[p[j]] == -1) block[p[j]] = nblocks;
    ++nblocks;
  }
  FiniteGroupRep rep;
  rep.degree = nblocks;
  for (const auto& g : cover.rep.perm) {
    std::vector<int> p(nblocks, -1);
    for (int j = 0; j < d; ++j) {
      int b = block[j], img = block[g[j]];
      if (p[b] == -1)
        p[b] = img;
      else
        check_internal(p[b] == img, "quotient action not well defined");
    }
    rep.perm.push_back(std::move(p));
  }
  return build_cover(cover.base, std::move(rep));
}

CurveDiagram deck_image(const FiniteCover& cover, const CurveDiagram& c,
                        const std::vector<int>& tau) {
  require(c.surface()->structurally_equal(*cover.total), "curve not on the total surface");
  const int d = cover.degree();
  require(is_perm(tau, d), "tau is not a sheet permutation");
  for (const auto& g : cover.rep.perm)
    require(compose(g, tau) == compose(tau, g),
            "tau does not commute with the monodromy");
  std::vector<Crossing> crossings;
  for (const Crossing& cr : c.crossings()) {
    int e = cover.edge_to_base[cr.edge], j = cover.edge_sheet[cr.edge];
    crossings.push_back({cover.cover_edge(e, tau[j]), cr.dir});
  }
  std::vector<std::vector<int>> slots(cover.total->num_edges());
  for (int E = 0; E < cover.total->num_edges(); ++E) {
    int e = cover.edge_to_base[E], j = cover.edge_sheet[E];
    slots[cover.cover_edge(e, tau[j])] = c.slots_on_edge(E);
  }
  return CurveDiagram(cover.total, std::move(crossings), std::move(slots));
}

bool homologous_mod_vertices(const PolySurface& s, const std::vector<long long>& a,
                             const std::vector<long long>& b) {
  require(a.size() == b.size() && static_cast<int>(a.size()) == s.num_edges(),
          "vector length must match the edge count");
  // a - b lies in the vertex coboundary lattice iff it is the
  // coboundary of an integer potential on the vertices: check by
  // propagating potentials over the (connected) vertex-edge graph.
  const int V = s.num_vertices();
  std::vector<long long> x(V, 0);
  std::vector<bool> set(V, false);
  std::vector<int> stack = {0};
  set[0] = true;
  std::vector<std::pair<int, int>> ends(s.num_edges());  // (tail, head)
  std::vector<std::vector<int>> incident(V);
  for (int e = 0; e < s.num_edges(); ++e) {
    int head = s.vertex_at_head(Dart::make(e, +1));
    int tail = s.vertex_at_head(Dart::make(e, -1));
    ends[e] = {tail, head};
    incident[tail].push_back(e);
    if (head != tail) incident[head].push_back(e);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : incident[v]) {
      auto [tail, head] = ends[e];
      long long t = a[e] - b[e];
      int other = (v == tail) ? head : tail;
      long long want = (v == tail) ? x[v] + t : x[v] - t;
      if (head == tail) {
        if (t != 0) return false;
        continue;
      }
      if (!set[other]) {
        set[other] = true;
        x[other] = want;
        stack.push_back(other);
      } else if (x[other] != want) {
        return false;
      }
    }
  }
  for (int e = 0; e < s.num_edges(); ++e) {
    auto [tail, head] = ends[e];
    if (head != tail && x[head] - x[tail] != a[e] - b[e]) return false;
  }
  return true;
}

}  // namespace surfcc

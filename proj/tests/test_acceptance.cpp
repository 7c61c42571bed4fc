// Acceptance suite: one pass/fail line per criterion.  Each criterion
// is checked against an oracle computed independently of the code path
// under test (exhaustive search, arithmetic replay, or BFS reachability).
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "surfcc/cover.hpp"

using namespace surfcc;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
  try {
    body();
    std::cout << "[PASS] criterion " << n << ": " << what << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "[FAIL] criterion " << n << ": " << what << " -- " << e.what()
              << "\n";
  }
}

void expect(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

// Exhaustive joint-position oracle: the minimum chord-crossing count
// over every slot interleaving of the two taut diagrams.  No bigon
// reduction is involved, so this is independent of the code under test.
int exhaustive_intersection(const SurfacePtr& s, const CurveDiagram& a,
                            const CurveDiagram& b) {
  int E = s->num_edges();
  std::vector<std::vector<std::vector<MergedPoint>>> per_edge(E);
  for (int e = 0; e < E; ++e) {
    const std::vector<int>& sa = a.slots_on_edge(e);
    const std::vector<int>& sb = b.slots_on_edge(e);
    std::vector<int> sel(sa.size() + sb.size(), 0);
    std::fill(sel.begin(), sel.begin() + sa.size(), 1);
    std::sort(sel.begin(), sel.end());
    do {
      std::vector<MergedPoint> order;
      size_t ia = 0, ib = 0;
      for (int x : sel)
        if (x)
          order.push_back({0, sa[ia++]});
        else
          order.push_back({1, sb[ib++]});
      per_edge[e].push_back(order);
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
  int best = -1;
  std::vector<size_t> idx(E, 0);
  while (true) {
    std::vector<std::vector<MergedPoint>> merged(E);
    for (int e = 0; e < E; ++e) merged[e] = per_edge[e][idx[e]];
    int c = Overlay(s, {a, b}, merged).count_pair(0, 1);
    if (best < 0 || c < best) best = c;
    int e = 0;
    for (; e < E; ++e) {
      if (++idx[e] < per_edge[e].size()) break;
      idx[e] = 0;
    }
    if (e == E) break;
  }
  return best;
}

long long mod(long long x, long long n) { return ((x % n) + n) % n; }

}  // namespace

int main() {
  auto s2 = standard_surface(2);
  HandlebodyStructure H2 = standard_handlebody(2);
  ContractOracle O2 = H2.oracle;

  // 1. Figure 1 pipeline, exact, under 10 seconds.
  criterion(1, "Figure 1 pipeline: degree-3 cover, 3+3 elevations, certificate", [&] {
    auto start = std::chrono::steady_clock::now();
    CurveDiagram delta0 = edge_dual(s2, 0), alpha = edge_dual(s2, 1);
    CurveDiagram delta1 = edge_dual(s2, 2);
    CurveDiagram delta2 = *embed_word(s2, {-4, -3, -1, 4, 1, 3});
    HandlebodyStructure H = make_handlebody(s2, {delta0, delta1});
    expect(geometric_intersection(delta0, alpha, O2) == 1, "i(delta0,alpha) != 1");
    expect(geometric_intersection(delta1, alpha, O2) == 0, "i(delta1,alpha) != 0");
    expect(geometric_intersection(delta1, delta2, O2) == 2, "i(delta1,delta2) != 2");
    expect(algebraic_intersection(delta2, alpha) == 0, "<delta2,alpha> != 0");
    FiniteCover cover = build_cover(s2, hom_from_intersection(s2, alpha, 3));
    expect(cover.degree() == 3, "cover degree != 3");
    expect(cover.total->euler_characteristic() == -6, "chi != -6");
    expect(cover.total->genus() == 4, "total genus != 4");
    auto e1 = elevate(cover, delta1), e2 = elevate(cover, delta2);
    expect(e1.size() == 3 && e2.size() == 3, "elevation counts != 3+3");
    for (const Elevation& e : e1) expect(e.degree == 1, "delta1 elevation degree != 1");
    for (const Elevation& e : e2) expect(e.degree == 1, "delta2 elevation degree != 1");
    for (const Elevation& x : e1) {
      int partners = 0;
      for (const Elevation& y : e2) {
        int n = geometric_intersection(x.curve, y.curve, cover.total_oracle);
        if (n != 0) {
          expect(n == 1, "elevation pair intersection != 1");
          ++partners;
        }
      }
      expect(partners == 2, "delta1 elevation partner count != 2");
    }
    auto cert = flexibility_certificate(cover, H, {delta1, delta2});
    expect(cert.has_value(), "no FlexCertificate");
    expect(cert->odd_count == 1, "certificate count != 1");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    expect(secs < 10.0, "runtime over 10 seconds");
  });

  // Shared corpora.
  std::vector<CurveDiagram> corpus6 = enumerate_curves(s2, 6);
  std::vector<CurveDiagram> meridians6;
  for (const CurveDiagram& c : corpus6)
    if (is_meridian(H2, c)) meridians6.push_back(c);

  // 2. Wave totality over meridian multicurves with <= 8 crossings.
  criterion(2, "wave totality: every intersecting meridian pair has a wave", [&] {
    std::vector<Multicurve> systems;
    for (const CurveDiagram& m : meridians6) systems.push_back({m});
    for (size_t i = 0; i < meridians6.size(); ++i)
      for (size_t j = i + 1; j < meridians6.size(); ++j) {
        if (meridians6[i].size() + meridians6[j].size() > 8) continue;
        if (geometric_intersection(meridians6[i], meridians6[j], O2) != 0) continue;
        systems.push_back({meridians6[i], meridians6[j]});
      }
    int checked = 0;
    for (size_t i = 0; i < systems.size(); ++i)
      for (size_t j = 0; j < systems.size(); ++j) {
        if (i == j) continue;
        bool intersecting = false;
        for (const CurveDiagram& a : systems[i])
          for (const CurveDiagram& b : systems[j])
            if (geometric_intersection(a, b, O2) != 0) intersecting = true;
        if (!intersecting) continue;
        auto w = find_wave(systems[i], systems[j], H2);
        expect(w.has_value(), "find_wave failed on an intersecting pair");
        expect(is_meridian(H2, w->surgery), "wave surgery is not a meridian");
        ++checked;
      }
    expect(checked > 100, "too few intersecting pairs exercised");
  });

  // 3. Extension decision for mod-n covers over genus 3.
  criterion(3, "cover extension iff all <delta_i, alpha> == 0 mod n", [&] {
    auto s3 = standard_surface(3);
    HandlebodyStructure H3 = standard_handlebody(3);
    std::vector<CurveDiagram> corpus3 = enumerate_curves(s3, 3);
    std::vector<CurveDiagram> meridians3;
    for (const CurveDiagram& c : corpus3)
      if (is_meridian(H3, c)) meridians3.push_back(c);
    expect(!meridians3.empty(), "no genus-3 meridians enumerated");
    int extending = 0;
    for (const CurveDiagram& alpha : corpus3)
      for (int n = 2; n <= 5; ++n) {
        FiniteCover cover = build_cover(s3, hom_from_intersection(s3, alpha, n));
        bool expected = true;
        for (const CurveDiagram& d : H3.disk_system)
          if (mod(algebraic_intersection(d, alpha), n) != 0) expected = false;
        auto cert = extends_to_handlebody_cover(cover, H3);
        expect(cert.extends == expected, "extension decision disagrees with pairings");
        if (cert.extends) {
          ++extending;
          // Corollary consistency: every meridian lifts homeomorphically.
          for (const CurveDiagram& m : meridians3)
            expect(lift_degree(cover, m) == 1, "meridian lift degree != 1");
        }
      }
    expect(extending > 0, "no extending cover in the sweep");
  });

  // 4. Multitwist verdicts.
  criterion(4, "multitwist verdicts match meridian conjunction and parity", [&] {
    std::vector<CurveDiagram> corpus4 = enumerate_curves(s2, 4);
    int same_sign_checked = 0, parity_checked = 0;
    for (size_t i = 0; i < corpus4.size(); ++i)
      for (size_t j = i + 1; j < corpus4.size(); ++j) {
        if (geometric_intersection(corpus4[i], corpus4[j], O2) != 0) continue;
        for (int p : {1, -1}) {
          TwistWord spec = {{corpus4[i], p}, {corpus4[j], 2 * p}};
          ExtensionVerdict v = check_multitwist(H2, spec);
          bool all_meridian =
              is_meridian(H2, corpus4[i]) && is_meridian(H2, corpus4[j]);
          expect((v.kind == ExtensionVerdict::Kind::AllMeridian) == all_meridian,
                 "same-sign verdict disagrees with meridian conjunction");
          if (!all_meridian)
            expect(v.kind == ExtensionVerdict::Kind::Obstructed,
                   "same-sign non-meridian spec not obstructed");
          ++same_sign_checked;
        }
        // Odd-cardinality all-non-meridian specs: obstructed by parity.
        if (!is_meridian(H2, corpus4[i])) {
          ExtensionVerdict v = check_multitwist(H2, {{corpus4[i], 1}});
          expect(v.kind == ExtensionVerdict::Kind::Obstructed,
                 "single non-meridian twist not obstructed");
          ++parity_checked;
        }
      }
    expect(same_sign_checked > 100 && parity_checked > 10,
           "too few multitwist specs exercised");
  });

  // 5. Intersection oracle equivalence and the twist formula.
  criterion(5, "geometric_intersection matches exhaustive oracle; twist formula", [&] {
    std::vector<CurveDiagram> corpus4 = enumerate_curves(s2, 4);
    int checked = 0;
    for (size_t i = 0; i < corpus4.size(); ++i)
      for (size_t j = i + 1; j < corpus4.size(); ++j) {
        if (corpus4[i].size() + corpus4[j].size() > 8) continue;
        int g = geometric_intersection(corpus4[i], corpus4[j], O2);
        expect(g == exhaustive_intersection(s2, corpus4[i], corpus4[j]),
               "bigon reduction disagrees with the exhaustive oracle");
        ++checked;
      }
    expect(checked > 1000, "too few pairs exercised");
    // i(T_beta^n(alpha), alpha) = |n| * i(alpha, beta)^2.
    int sampled = 0;
    for (size_t i = 0; i < corpus4.size() && sampled < 6; ++i)
      for (size_t j = 0; j < corpus4.size() && sampled < 6; ++j) {
        if (i == j) continue;
        int iab = geometric_intersection(corpus4[i], corpus4[j], O2);
        if (iab != 1 && iab != 2) continue;
        for (int n = 1; n <= 3; ++n) {
          CurveDiagram t = dehn_twist(corpus4[i], corpus4[j], n, O2);
          expect(geometric_intersection(t, corpus4[i], O2) == n * iab * iab,
                 "twist intersection formula violated");
        }
        ++sampled;
      }
    expect(sampled == 6, "too few twist samples");
  });

  // 6. Disk-exchange connectivity at crossing bound 6.
  criterion(6, "all enumerated reduced disk systems connected within bound 6", [&] {
    std::vector<Multicurve> systems;
    for (size_t i = 0; i < meridians6.size(); ++i)
      for (size_t j = i + 1; j < meridians6.size(); ++j)
        if (is_reduced_disk_system(H2, {meridians6[i], meridians6[j]}))
          systems.push_back({meridians6[i], meridians6[j]});
    expect(systems.size() >= 10, "too few reduced systems enumerated");
    for (size_t i = 0; i < systems.size(); ++i)
      for (size_t j = i + 1; j < systems.size(); ++j)
        expect(disk_exchange_path(H2, systems[i], systems[j], 6).has_value(),
               "unreachable pair of reduced disk systems");
  });

  // 7. degree_one_search: total success, arithmetic replay, BFS agreement.
  criterion(7, "degree_one_search succeeds everywhere and replays exactly", [&] {
    for (int g : {2, 3})
      for (long long n = 2; n <= 12; ++n) {
        // Reverse BFS from every zero-containing state; exchange moves
        // are invertible, so this is the set from which a zero is
        // reachable.  The search must succeed exactly on that set,
        // which must be everything.
        int states = 1;
        for (int t = 0; t < g; ++t) states *= static_cast<int>(n);
        auto encode = [&](const std::vector<long long>& r) {
          int code = 0;
          for (int t = g - 1; t >= 0; --t) code = code * static_cast<int>(n) +
                                                 static_cast<int>(r[t]);
          return code;
        };
        std::vector<char> reach(states, 0);
        std::vector<int> queue;
        for (int code = 0; code < states; ++code) {
          int c = code;
          bool zero = false;
          for (int t = 0; t < g; ++t) {
            if (c % n == 0) zero = true;
            c /= static_cast<int>(n);
          }
          if (zero) reach[code] = 1, queue.push_back(code);
        }
        for (size_t head = 0; head < queue.size(); ++head) {
          int code = queue[head], c = code;
          std::vector<long long> r(g);
          for (int t = 0; t < g; ++t) {
            r[t] = c % n;
            c /= static_cast<int>(n);
          }
          for (int j = 0; j < g; ++j)
            for (int i = 0; i < g; ++i) {
              if (i == j) continue;
              for (int k : {1, -1}) {
                std::vector<long long> r2 = r;
                r2[j] = mod(r2[j] + k * r2[i], n);
                int code2 = encode(r2);
                if (!reach[code2]) reach[code2] = 1, queue.push_back(code2);
              }
            }
        }
        std::vector<long long> tuple(g, 0);
        for (int code = 0; code < states; ++code) {
          int c = code;
          for (int t = 0; t < g; ++t) {
            tuple[t] = c % n;
            c /= static_cast<int>(n);
          }
          expect(reach[code] == 1, "BFS oracle: zero unreachable");
          Degree1Result res = degree_one_search(tuple, n);
          // Arithmetic replay of the move sequence.
          std::vector<long long> r = tuple;
          for (long long& x : r) x = mod(x, n);
          for (const Degree1Move& m : res.moves) {
            if (m.kind == Degree1Move::Kind::Negate)
              r[m.j] = mod(-r[m.j], n);
            else
              r[m.j] = mod(r[m.j] + m.k * r[m.i], n);
          }
          expect(r == res.final_residues, "replay disagrees with final residues");
          expect(mod(r[res.zero_coordinate], n) == 0, "zero coordinate not zero");
        }
      }
  });

  // 8. recur scenario.
  criterion(8, "recur meridian is simple and violates the wave pattern upstairs", [&] {
    auto s3 = standard_surface(3);
    HandlebodyStructure H3 = standard_handlebody(3);
    CurveDiagram alpha = H3.disk_system[0], beta = H3.disk_system[1];
    CurveDiagram rho = *embed_word(s3, {2, 4, 6});
    CurveDiagram delta = recur_meridian(H3, alpha, beta, rho);
    expect(is_meridian(H3, delta), "delta is not a meridian");
    expect(self_intersection(delta, H3.oracle) == 0, "delta self-intersects");
    FiniteCover cover = build_cover(s3, hom_from_intersection(s3, edge_dual(s3, 3), 2));
    expect(cover.rep.image(alpha.crossing_word()) == cover.rep.image(Word{}),
           "alpha does not lift in the hypothesis cover");
    expect(cover.rep.image(beta.crossing_word()) != cover.rep.image(Word{}),
           "beta lifts in the hypothesis cover");
    expect(wave_violation(cover, delta, {alpha, H3.disk_system[2]}),
           "no wave violation upstairs");
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: FAILURES PRESENT")
            << "\n";
  return failures == 0 ? 0 : 1;
}

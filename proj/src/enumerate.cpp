#include "surfcc/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace surfcc {

CurveKey curve_key(const CurveDiagram& c, const ContractOracle& oracle) {
  CurveKey k;
  k.canonical = oracle.pres->conjugacy_canonical(oracle.project(c.crossing_word()), true);
  const SurfacePtr& s = c.surface();
  for (int e = 0; e < s->num_edges(); ++e)
    k.fingerprint.push_back(geometric_intersection(c, edge_dual(s, e), oracle));
  return k;
}

namespace {

// Cyclic words are enumerated once each: keep only the spelling that is
// lexicographically least among all rotations of w and of its inverse.
bool is_least_cyclic(const Word& w) {
  const int n = static_cast<int>(w.size());
  Word inv = inverse_word(w);
  for (const Word* base : {&w, const_cast<const Word*>(&inv)})
    for (int r = 0; r < n; ++r) {
      if (base == &w && r == 0) continue;
      for (int i = 0; i < n; ++i) {
        int x = (*base)[(r + i) % n];
        if (x != w[i]) {
          if (x < w[i]) return false;
          break;
        }
      }
    }
  return true;
}

}  // namespace

std::vector<CurveDiagram> enumerate_curves(const SurfacePtr& s, int max_crossings) {
  require(max_crossings >= 1, "enumeration bound must be at least 1");
  require(s->num_vertices() == 1, "enumeration requires a one-vertex surface");
  const int letters = 2 * s->num_edges();
  double estimate = 0;
  for (int len = 1, base = letters; len <= max_crossings; ++len)
    estimate += base * std::pow(static_cast<double>(letters - 1), len - 1);
  require(estimate <= 2e7, "enumeration bound too large (resource guard)");

  ContractOracle oracle = ContractOracle::for_base(s);
  const DualPresentation& pres = *oracle.pres;

  std::map<Word, CurveDiagram> found;  // canonical -> taut embedded representative
  Word w;
  auto consider = [&]() {
    if (!is_least_cyclic(w)) return;
    if (static_cast<int>(pres.geodesic_cyclic(w).size()) != static_cast<int>(w.size()))
      return;  // not a taut spelling; the class shows up at its true length
    Word can = pres.conjugacy_canonical(w, true);
    if (found.count(can)) return;
    if (auto d = embed_word(s, w)) found.emplace(std::move(can), *d);
  };
  // Generate every cyclically reduced word of each exact length once.
  for (int len = 1; len <= max_crossings; ++len) {
    Word cur;
    auto gen = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == len) {
        if (len == 1 || cur.back() != -cur.front()) {
          w = cur;
          consider();
        }
        return;
      }
      for (int l = -s->num_edges(); l <= s->num_edges(); ++l) {
        if (l == 0) continue;
        if (!cur.empty() && l == -cur.back()) continue;
        cur.push_back(l);
        self(self);
        cur.pop_back();
      }
    };
    gen(gen);
  }

  std::vector<std::pair<CurveKey, CurveDiagram>> keyed;
  for (const auto& [can, d] : found) keyed.emplace_back(curve_key(d, oracle), d);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CurveDiagram> out;
  out.reserve(keyed.size());
  for (auto& [k, d] : keyed) out.push_back(std::move(d));
  return out;
}

}  // namespace surfcc

#pragma once

#include "surfcc/overlay.hpp"

namespace surfcc {

// Identity card of an isotopy class on the enumerated corpus: the
// unoriented conjugacy-canonical crossing word plus the geometric
// intersection numbers against the 2g edge duals.  Equal canonicals
// with different fingerprints are a hard error (never merged).
struct CurveKey {
  Word canonical;
  std::vector<long long> fingerprint;
  bool operator==(const CurveKey&) const = default;
  auto operator<=>(const CurveKey&) const = default;
};

CurveKey curve_key(const CurveDiagram& c, const ContractOracle& oracle);

// One taut embedded representative per isotopy class of essential
// simple closed curves admitting a diagram with at most max_crossings
// crossings.  Deterministic order (sorted by key).
std::vector<CurveDiagram> enumerate_curves(const SurfacePtr& s, int max_crossings);

}  // namespace surfcc

#include <algorithm>
#include <string>

#include "surfcc/cover.hpp"

namespace surfcc {

std::optional<FlexCertificate> flexibility_certificate(const FiniteCover& cover,
                                                       const HandlebodyStructure& H,
                                                       const Multicurve& meridians) {
  require(H.surface->structurally_equal(*cover.base),
          "handlebody not on the base surface");
  require(!meridians.empty(), "need at least one meridian");
  for (const CurveDiagram& m : meridians)
    require(is_meridian(H, m), "input curve is not a meridian");

  struct Tagged {
    Elevation elev;
    int base;
  };
  std::vector<Tagged> all;
  for (size_t i = 0; i < meridians.size(); ++i)
    for (Elevation& e : elevate(cover, meridians[i]))
      all.push_back({std::move(e), static_cast<int>(i)});

  for (size_t x = 0; x < all.size(); ++x)
    for (size_t y = x + 1; y < all.size(); ++y) {
      int i = geometric_intersection(all[x].elev.curve, all[y].elev.curve,
                                     cover.total_oracle);
      if (i % 2 == 1)
        return FlexCertificate{all[x].elev, all[y].elev, meridians[all[x].base],
                               meridians[all[y].base], i};
    }
  return std::nullopt;
}

CurveDiagram recur_meridian(const HandlebodyStructure& H, const CurveDiagram& alpha,
                            const CurveDiagram& beta, const CurveDiagram& rho) {
  require(H.genus() >= 3, "the recursion configuration needs genus at least 3");
  require(is_meridian(H, alpha) && is_meridian(H, beta),
          "alpha and beta must be meridians");
  const ContractOracle& oracle = H.oracle;
  require(geometric_intersection(alpha, beta, oracle) == 0,
          "alpha and beta must be disjoint");

  Word wa = alpha.crossing_word(), wb = beta.crossing_word();
  // beta' = beta * alpha, read from the shared basepoint.
  Word wbp = wb;
  wbp.insert(wbp.end(), wa.begin(), wa.end());
  auto bp = detail::embed_class(H.surface, *oracle.pres, free_reduce(wbp));
  require(bp.has_value(), "beta * alpha is not simple");
  // In the strictly transverse model rho crosses the band sum
  // beta * alpha exactly twice (once near each summand; mod-2 homology
  // rules out a single crossing).
  int ia = geometric_intersection(rho, alpha, oracle);
  int ib = geometric_intersection(rho, beta, oracle);
  int ibp = geometric_intersection(rho, *bp, oracle);
  require(ia == 1, "rho must meet alpha exactly once, meets it " +
                       std::to_string(ia) + " times");
  require(ib == 1, "rho must meet beta exactly once, meets it " +
                       std::to_string(ib) + " times");
  require(ibp == 2, "rho must meet beta*alpha exactly twice, meets it " +
                        std::to_string(ibp) + " times");

  // delta = beta * rho * (beta * alpha)^-1 * rho^-1, realized as the
  // band sum of beta and (beta * alpha)^-1 along an embedded subarc of
  // rho: traverse beta from its rho-crossing, run along the band to
  // beta', traverse beta' backwards, and return along the band.  A
  // band sum of disjoint simple curves is simple.
  Overlay o = reduce_all_bigons(
      Overlay::sequential(H.surface, {normalize(beta), *bp, normalize(rho)}), oracle);
  require(o.count_pair(0, 1) == 0, "beta and beta*alpha must be disjoint");
  check_internal(o.count_pair(0, 2) == 1 && o.count_pair(1, 2) == 2,
                 "band configuration lost in reduction");

  // A rho-crossing of beta adjacent (along rho) to a rho-crossing of
  // beta'; the subarc between them is the band core.  One of the band
  // choices collapses onto the class of alpha; prefer the other one.
  auto rotate_from = [](const Word& w, int k) {
    Word r(w.begin() + k, w.end());
    r.insert(r.end(), w.begin(), w.begin() + k);
    return r;
  };
  auto band_sum = [&](int x, int y, int band_dir) {
    Word w_beta = o.curve(0).crossing_word();
    Word w_bp = o.curve(1).crossing_word();
    // Around beta starting just after x, across the band, backwards
    // around beta' from y, and back across the band.
    Word w =
        rotate_from(w_beta, (o.isects()[x].arc_a + 1) % std::max<int>(1, w_beta.size()));
    Word band = o.subarc_word(2, x, y, band_dir);
    w.insert(w.end(), band.begin(), band.end());
    Word back = inverse_word(
        rotate_from(w_bp, (o.isects()[y].arc_a + 1) % std::max<int>(1, w_bp.size())));
    w.insert(w.end(), back.begin(), back.end());
    band = inverse_word(band);
    w.insert(w.end(), band.begin(), band.end());
    return cyclic_reduce(std::move(w));
  };

  const Word alpha_canon =
      oracle.pres->conjugacy_canonical(normalize(alpha).crossing_word(), true);
  const std::vector<int>& along = o.along(2);
  int n_along = static_cast<int>(along.size());
  std::optional<CurveDiagram> delta;
  for (int t = 0; t < n_along; ++t) {
    int p = along[t], q = along[(t + 1) % n_along];
    int cp = o.isects()[p].ca, cq = o.isects()[q].ca;  // rho is cb in both
    int x, y, band_dir;
    if (cp == 0 && cq == 1) {
      x = p, y = q, band_dir = +1;
    } else if (cp == 1 && cq == 0) {
      x = q, y = p, band_dir = -1;
    } else {
      continue;
    }
    Word w = band_sum(x, y, band_dir);
    auto cand = detail::embed_class(H.surface, *oracle.pres, w);
    check_internal(cand.has_value(), "band sum class is not simple");
    if (!delta || oracle.pres->conjugacy_canonical(w, true) != alpha_canon)
      delta = std::move(cand);
    if (oracle.pres->conjugacy_canonical(delta->crossing_word(), true) != alpha_canon)
      break;
  }
  check_internal(delta.has_value(), "no band arc between beta and beta*alpha");
  check_internal(is_meridian(H, *delta), "recursion commutator is not a meridian");
  return *delta;
}

bool wave_violation(const FiniteCover& cover, const CurveDiagram& delta,
                    const Multicurve& system) {
  require(delta.surface()->structurally_equal(*cover.base),
          "delta not on the base surface");
  std::vector<CurveDiagram> system_up;
  for (const CurveDiagram& c : system)
    for (Elevation& e : elevate(cover, c)) system_up.push_back(std::move(e.curve));

  for (Elevation& de : elevate(cover, delta)) {
    std::vector<CurveDiagram> curves = {std::move(de.curve)};
    curves.insert(curves.end(), system_up.begin(), system_up.end());
    Overlay o = reduce_all_bigons(Overlay::sequential(cover.total, std::move(curves)),
                                  cover.total_oracle);
    bool crosses = false;
    for (const Overlay::Isect& is : o.isects())
      if (is.ca == 0) {
        crosses = true;
        break;
      }
    if (crosses && detail::wave_shapes(o, 1, static_cast<int>(system_up.size())).empty())
      return true;
  }
  return false;
}

Degree1Result degree_one_search(std::vector<long long> residues, long long n) {
  require(n >= 2, "modulus must be at least 2");
  require(!residues.empty(), "need at least one residue");
  for (long long& r : residues) r = ((r % n) + n) % n;

  Degree1Result out;
  for (size_t i = 0; i < residues.size(); ++i)
    if (residues[i] == 0) {
      out.zero_coordinate = static_cast<int>(i);
      out.final_residues = std::move(residues);
      return out;
    }
  require(residues.size() >= 2, "a single nonzero residue cannot be reduced");

  // Euclid on the first two coordinates; the non-gcd one hits zero.
  long long& a = residues[0];
  long long& b = residues[1];
  while (a != 0 && b != 0) {
    if (a >= b) {
      long long q = a / b;
      out.moves.push_back({Degree1Move::Kind::Exchange, 0, 1, -q});
      a -= q * b;
    } else {
      long long q = b / a;
      out.moves.push_back({Degree1Move::Kind::Exchange, 1, 0, -q});
      b -= q * a;
    }
  }
  out.zero_coordinate = (a == 0) ? 0 : 1;
  out.final_residues = std::move(residues);
  return out;
}

}  // namespace surfcc

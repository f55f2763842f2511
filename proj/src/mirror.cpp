#include "syz/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "syz/reduced_area.hpp"

namespace syz {

namespace {

NovikovNum one_plus(const NovikovNum& y) {
  return NovikovNum::constant(1.0, y.cutoff()).add(y);
}

}  // namespace

bool in_chart_region(int l, const BasePoint& q, const ParamSet& P) {
  std::vector<double> sn = P.root_norms();
  std::sort(sn.begin(), sn.end());
  if (l < 0 || l > P.n() + 1) return false;
  double lo = (l == 0) ? 0.0 : sn[l - 1];
  double hi = (l == P.n() + 1) ? std::numeric_limits<double>::infinity() : sn[l];
  if (q.r > lo && q.r < hi) return true;
  bool near_wall = std::abs(q.r - lo) <= 1e-6 * std::max(lo, 1.0) ||
                   (std::isfinite(hi) && std::abs(q.r - hi) <= 1e-6 * std::max(hi, 1.0));
  return near_wall && q.s != 0.0;
}

MirrorPoint fiber_point(const BasePoint& q, int k, const NovikovNum& unit1,
                        const NovikovNum& unit2, const ParamSet& P, double tol) {
  if (!in_chart_region(k, q, P))
    throw std::domain_error("fiber_point: base point outside U_k");
  if (!(unit1.val() == ExtReal(0.0)) || !(unit2.val() == ExtReal(0.0)))
    throw std::invalid_argument("fiber_point: units must have valuation 0");
  double e2 = psi(q.s, q.r, P, tol) - double(k) * std::min(0.0, q.s);
  MirrorPoint m;
  m.n = P.n();
  m.chart = k;
  m.y1 = unit1.shift(1.0, q.s);
  m.y2 = unit2.shift(1.0, e2);
  m.base = q;
  return m;
}

NovikovNum W_local(int k, const NovikovNum& y1, const NovikovNum& y2) {
  return y2.mul(one_plus(y1).pow_int(k));
}

std::pair<NovikovNum, NovikovNum> phi_transition(bool forward, const NovikovNum& y1,
                                                 const NovikovNum& y2) {
  if (y1.val() == ExtReal(0.0))
    throw std::domain_error("phi_transition: on wall (val(y1) = 0)");
  NovikovNum f = one_plus(y1);
  return {y1, forward ? y2.mul(f) : y2.mul(f.inv())};
}

NovToricPoint g_embed(const MirrorPoint& m) {
  const int n = m.n;
  const int k = m.chart;
  if (k < 0 || k > n + 1) throw std::invalid_argument("g_embed: chart index");
  NovikovNum opy = one_plus(m.y1);
  NovikovNum y2i = m.y2.inv();

  std::optional<NovToricPoint> lower, upper;
  if (k <= n)  // g_k^-: (z, w) = (y2^-1 (1 + y1), y2) at cone k
    lower = chart_to_homogeneous(n, k, y2i.mul(opy), m.y2);
  if (k >= 1)  // g_{k-1}^+: (z, w) = (y2^-1, y2 (1 + y1)) at cone k-1
    upper = chart_to_homogeneous(n, k - 1, y2i, m.y2.mul(opy));

  if (lower && upper) {
    // same homogeneous point through the toric gluing: reading the upper
    // placement in cone k must give back the lower placement's (z, w)
    auto [z, w] = chart_coords(*upper, k);
    auto [zl, wl] = chart_coords(*lower, k);
    if (!z.equals(zl, 1e-9) || !w.equals(wl, 1e-9))
      throw std::runtime_error("g_embed: chart placements disagree");
  }
  return lower ? *lower : *upper;
}

std::pair<NovikovNum, NovikovNum> torus_invariants(const NovToricPoint& p) {
  NovikovNum prod = NovikovNum::constant(1.0, 1e300);
  for (int j = 0; j < int(p.x().size()); ++j) {
    if (p.x()[j].is_zero)
      throw std::domain_error("torus_invariants: point not in the dense torus");
    prod = prod.mul(p.x()[j].num.pow_int(j));
  }
  return {prod, p.y()};
}

BasePoint pi0_dual(const MirrorPoint& m, const ParamSet& P, double tol) {
  double s = m.y1.val().finite();
  double c = m.y2.val().finite() + double(m.chart) * std::min(0.0, s);
  return {s, psi_inverse_r(s, c, P, tol)};
}

}  // namespace syz

#include "syz/wall_crossing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "syz/reduced_area.hpp"

namespace syz {

DiskClass DiskClass::zero(int n, int anchor) {
  DiskClass c;
  c.n = n;
  c.anchor = anchor;
  c.coeff_S.assign(n, 0);
  return c;
}

DiskClass DiskClass::beta(int n, int anchor) {
  DiskClass c = zero(n, anchor);
  c.coeff_beta = 1;
  return c;
}

DiskClass DiskClass::delta(int n, int anchor) {
  DiskClass c = zero(n, anchor);
  c.coeff_delta = 1;
  return c;
}

DiskClass DiskClass::sphere(int n, int anchor, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("DiskClass::sphere: 1 <= j <= n");
  DiskClass c = zero(n, anchor);
  c.coeff_S[j - 1] = 1;
  return c;
}

DiskClass DiskClass::add(const DiskClass& o) const {
  if (n != o.n || anchor != o.anchor)
    throw std::invalid_argument("DiskClass::add: anchor mismatch");
  DiskClass c = *this;
  c.coeff_beta += o.coeff_beta;
  c.coeff_delta += o.coeff_delta;
  for (int j = 0; j < n; ++j) c.coeff_S[j] += o.coeff_S[j];
  return c;
}

DiskClass DiskClass::scaled(long long m) const {
  DiskClass c = *this;
  c.coeff_beta *= m;
  c.coeff_delta *= m;
  for (auto& s : c.coeff_S) s *= m;
  return c;
}

nlohmann::json DiskClass::to_json() const {
  return {{"anchor", anchor},
          {"beta", coeff_beta},
          {"delta", coeff_delta},
          {"S", coeff_S}};
}

DiskClass expand_beta(int n, int l, const std::set<int>& I) {
  if (l < 0 || l > n) throw std::invalid_argument("expand_beta: 0 <= l <= n");
  for (int i : I)
    if (i < 0 || i >= l) throw std::invalid_argument("expand_beta: I not in [l]");
  DiskClass c = DiskClass::beta(n, l);
  c.coeff_delta = (long long)I.size();
  for (int j = 1; j <= l; ++j) {
    long long cap = (long long)std::count_if(I.begin(), I.end(),
                                             [j](int i) { return i < j; });
    c.coeff_S[j - 1] -= cap;
  }
  return c;
}

namespace {

void check_region_in_domain(int anchor, const RegionTag& region) {
  bool ok = false;
  switch (region.kind) {
    case RegionTag::Kind::R:
      ok = region.idx == anchor;
      break;
    case RegionTag::Kind::Nplus:
    case RegionTag::Kind::Nminus:
      ok = region.idx == anchor || region.idx == anchor - 1;
      break;
  }
  if (!ok) throw std::domain_error("intersect: region outside the anchor chart");
}

void check_pairing_defined(const DivisorTag& D, const RegionTag& region) {
  if (D.kind == DivisorTag::Kind::Du && region.kind == RegionTag::Kind::Nminus &&
      region.idx == D.k)
    throw std::domain_error("intersect: wall-obstructed pairing (Du on Nminus)");
  if (D.kind == DivisorTag::Kind::Dv && region.kind == RegionTag::Kind::Nplus &&
      region.idx == D.k)
    throw std::domain_error("intersect: wall-obstructed pairing (Dv on Nplus)");
}

}  // namespace

long long intersect(const DiskClass& c, const DivisorTag& D, const RegionTag& region) {
  check_region_in_domain(c.anchor, region);
  check_pairing_defined(D, region);
  if (D.kind == DivisorTag::Kind::AntiCanonical) return c.coeff_beta;

  int k = D.k;
  if (k < 0 || k > c.n) throw std::invalid_argument("intersect: divisor index");
  int d = c.delta_index();
  long long v = 0;
  if (D.kind == DivisorTag::Kind::Du) {
    // beta row is zero
    if (k == d) v += c.coeff_delta;
    if (k >= 1) v += c.coeff_S[k - 1];       // S_k . Du(k) = +1
    if (k + 1 <= c.n) v -= c.coeff_S[k];     // S_{k+1} . Du(k) = -1
  } else {
    if (k < c.anchor) v += c.coeff_beta;     // beta_l . Dv(k) = 1 for k in [l]
    if (k == d) v -= c.coeff_delta;
    if (k >= 1) v -= c.coeff_S[k - 1];
    if (k + 1 <= c.n) v += c.coeff_S[k];
  }
  return v;
}

DiskClass solve_class_from_intersections(int n, int anchor,
                                         const std::map<DivisorTag, long long>& targets,
                                         const RegionTag& region,
                                         long long boundary_multiple_of_sigma,
                                         long long coeff_beta) {
  bool has_du = false, has_dv = false;
  for (const auto& [tag, val] : targets) {
    if (tag.kind == DivisorTag::Kind::Du) has_du = true;
    if (tag.kind == DivisorTag::Kind::Dv) has_dv = true;
  }
  bool use_du = has_du;
  // a full row of whichever family drives the solve
  for (int k = 0; k <= n; ++k) {
    DivisorTag t = use_du ? DivisorTag::Du(k) : DivisorTag::Dv(k);
    if (!targets.count(t))
      throw std::invalid_argument("solve_class_from_intersections: incomplete row");
    check_pairing_defined(t, region);
  }
  check_region_in_domain(anchor, region);

  DiskClass c = DiskClass::zero(n, anchor);
  c.coeff_beta = coeff_beta;
  c.coeff_delta = boundary_multiple_of_sigma;
  int d = c.delta_index();

  // triangular sweep: u_k collects the S-only part of row k, and the partial
  // sums recover the S coefficients; the last one closes the consistency check
  long long s_prev = 0;  // s_0 = 0
  for (int k = 0; k <= n; ++k) {
    long long t = targets.at(use_du ? DivisorTag::Du(k) : DivisorTag::Dv(k));
    long long u;
    if (use_du) {
      u = t - (k == d ? c.coeff_delta : 0);
      // u_k = s_k - s_{k+1}
    } else {
      u = t - (k < anchor ? c.coeff_beta : 0) + (k == d ? c.coeff_delta : 0);
      u = -u;  // Dv rows carry the opposite S signs
    }
    long long s_next = s_prev - u;
    if (k < n)
      c.coeff_S[k] = s_next;  // this is s_{k+1}
    else if (s_next != 0)
      throw std::runtime_error("solve_class_from_intersections: no integral solution");
    s_prev = s_next;
  }

  // cross-check any targets from the other family
  if (has_du && has_dv) {
    for (const auto& [tag, val] : targets)
      if (tag.kind == DivisorTag::Kind::Dv && intersect(c, tag, region) != val)
        throw std::runtime_error("solve_class_from_intersections: no integral solution");
  }
  return c;
}

DiskClass monodromy_transport(const DiskClass& c, int from_anchor, int to_anchor,
                              WallSign wall) {
  if (c.anchor != from_anchor)
    throw std::invalid_argument("monodromy_transport: anchor mismatch");
  if (std::abs(to_anchor - from_anchor) != 1 || to_anchor < 0 || to_anchor > c.n + 1)
    throw std::invalid_argument("monodromy_transport: non-adjacent anchors");

  long long m = (wall == WallSign::Minus) ? 1 : 0;
  DiskClass r = DiskClass::zero(c.n, to_anchor);
  r.coeff_beta = c.coeff_beta;
  r.coeff_S = c.coeff_S;

  if (to_anchor == from_anchor + 1) {
    int l = from_anchor;  // wall index
    // beta_l = beta_{l+1} + [minus] delta_l; then delta_l in the target basis
    long long dtot = c.coeff_delta + m * c.coeff_beta;
    r.coeff_delta = dtot;
    if (l + 1 <= c.n) r.coeff_S[l] -= dtot;  // delta_l = delta_{l+1} - S_{l+1}
  } else {
    int l = to_anchor;  // wall index
    // beta_{l+1} = beta_l - [minus] delta_l; delta_{l+1} = delta_l + S_{l+1}
    r.coeff_delta = c.coeff_delta - m * c.coeff_beta;
    if (l + 1 <= c.n) r.coeff_S[l] += c.coeff_delta;
  }
  return r;
}

double energy(const DiskClass& c, const BasePoint& q, const ParamSet& P, double tol) {
  // U_l in the r-direction: (|a_{l-1}|, |a_l|) in sorted-norm order, with the
  // wall circles themselves admissible when s != 0
  std::vector<double> sn = P.root_norms();
  std::sort(sn.begin(), sn.end());
  double lo = (c.anchor == 0) ? 0.0 : sn[c.anchor - 1];
  double hi = (c.anchor == P.n() + 1) ? std::numeric_limits<double>::infinity()
                                      : sn[c.anchor];
  bool inside = q.r > lo && q.r < hi;
  bool on_wall = (std::abs(q.r - lo) <= 1e-6 * std::max(lo, 1.0) ||
                  std::abs(q.r - hi) <= 1e-6 * std::max(q.r, 1.0)) &&
                 q.s != 0.0;
  if (!inside && !on_wall) throw std::domain_error("energy: base point outside U_l");

  double e_beta = psi(q.s, q.r, P, tol) - double(c.anchor) * std::min(0.0, q.s);
  return double(c.coeff_beta) * e_beta + double(c.coeff_delta) * q.s;
}

}  // namespace syz

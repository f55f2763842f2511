#pragma once

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "syz/params.hpp"

namespace syz {

// Divisors paired against disk classes: the open-part components D_u^k, D_v^k
// (0 <= k <= n) and the anti-canonical divisor.
struct DivisorTag {
  enum class Kind { Du, Dv, AntiCanonical };
  Kind kind;
  int k = 0;

  static DivisorTag Du(int k) { return {Kind::Du, k}; }
  static DivisorTag Dv(int k) { return {Kind::Dv, k}; }
  static DivisorTag anti_canonical() { return {Kind::AntiCanonical, 0}; }
  bool operator<(const DivisorTag& o) const {
    return std::tie(kind, k) < std::tie(o.kind, o.k);
  }
};

// Base regions: chart interiors R(l) for 0 <= l <= n+1 and wall neighborhoods
// N_{k,+-} for 0 <= k <= n.  Pairing with Du(k) is undefined on Nminus(k) and
// with Dv(k) on Nplus(k).
struct RegionTag {
  enum class Kind { R, Nplus, Nminus };
  Kind kind;
  int idx = 0;

  static RegionTag R(int l) { return {Kind::R, l}; }
  static RegionTag Nplus(int k) { return {Kind::Nplus, k}; }
  static RegionTag Nminus(int k) { return {Kind::Nminus, k}; }
};

// Integer combination coeff_beta * beta_l + coeff_delta * delta_l +
// sum_j coeff_S[j] * S_j anchored at chart l.  The delta symbol of the
// outermost anchor l = n+1 is delta_n (the only delta-section live there).
struct DiskClass {
  int n = 0;
  int anchor = 0;
  long long coeff_beta = 0;
  long long coeff_delta = 0;
  std::vector<long long> coeff_S;  // S_1..S_n at indices 0..n-1

  static DiskClass zero(int n, int anchor);
  static DiskClass beta(int n, int anchor);
  static DiskClass delta(int n, int anchor);
  static DiskClass sphere(int n, int anchor, int j);  // S_j, 1 <= j <= n

  DiskClass add(const DiskClass& o) const;
  DiskClass scaled(long long m) const;
  bool operator==(const DiskClass& o) const = default;

  // delta index this anchor's delta coefficient refers to
  int delta_index() const { return anchor <= n ? anchor : n; }

  nlohmann::json to_json() const;
};

// beta_l + |I| delta_l - sum_{j=1}^{l} |I cap [j]| S_j
DiskClass expand_beta(int n, int l, const std::set<int>& I);

// bilinear pairing; throws on wall-obstructed pairings and on regions outside
// the anchor chart's domain
long long intersect(const DiskClass& c, const DivisorTag& D, const RegionTag& region);

// Recover (coeff_S) from a full Du- or Dv-row of targets given the two
// boundary components (coeff_beta along the fiber class, coeff_delta along
// sigma); consistency-checked triangular solve.
DiskClass solve_class_from_intersections(int n, int anchor,
                                         const std::map<DivisorTag, long long>& targets,
                                         const RegionTag& region,
                                         long long boundary_multiple_of_sigma,
                                         long long coeff_beta = 1);

enum class WallSign { Plus, Minus };

// rewrite a class anchored at l (or l+1) into the adjacent anchor across the
// wall at index l
DiskClass monodromy_transport(const DiskClass& c, int from_anchor, int to_anchor,
                              WallSign wall);

// E(beta_l) = psi(s,r) - l*min{0,s}, E(delta) = s, E(S_j) = 0
double energy(const DiskClass& c, const BasePoint& q, const ParamSet& P,
              double tol = 1e-8);

}  // namespace syz

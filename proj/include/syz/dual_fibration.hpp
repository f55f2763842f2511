#pragma once

#include <functional>
#include <string>
#include <vector>

#include "syz/params.hpp"
#include "syz/toric.hpp"

namespace syz {

// point of the piecewise-linear surface: (gamma_0, ..., gamma_{n+1}, s); the
// first n+2 coordinates are nondecreasing and equal, as a multiset, the wall
// values psi_0(s)..psi_n(s) plus one free value c
struct SurfacePoint {
  std::vector<double> coords;

  int n() const { return int(coords.size()) - 3; }
  double s() const { return coords.back(); }
};

// (k+1)-th smallest value of the sample; ties and +-inf allowed
ExtReal order_stat(std::vector<ExtReal> sample, int k);

// sorted wall values psi_0(s) <= ... <= psi_n(s)
std::vector<double> sorted_psi(double s, const ParamSet& P, double tol = 1e-8);

double gamma_k(double s, double c, int k, const ParamSet& P, double tol = 1e-8);
SurfacePoint gamma_vec(double s, double c, const ParamSet& P, double tol = 1e-8);
SurfacePoint corner_A(int k, double s, const ParamSet& P, double tol = 1e-8);

SurfacePoint j_embed(const BasePoint& q, const ParamSet& P, double tol = 1e-8);

// recover (s, r): delete one copy of each psi_j(s) from the coordinate
// multiset (within match_tol), the leftover is c, then invert psi in r
BasePoint j_inverse(const SurfacePoint& p, const ParamSet& P,
                    double match_tol = 1e-7);

// the free value c recovered by the multiset deletion (also used by
// classify_point); throws "not on surface" beyond match_tol
double surface_free_value(const SurfacePoint& p, const ParamSet& P,
                          double match_tol = 1e-7);

SurfacePoint F_eval(const TropToricPoint& p, const ParamSet& P, double tol = 1e-8);

BasePoint f_eval(const TropToricPoint& p, const ParamSet& P, double tol = 1e-8);

struct SmoothnessVerdict {
  bool smooth = false;
  int case_id = 0;  // 1: s != 0 torus chart; 2: s = 0 between walls; 3: corner
  int k0 = -1;      // case-2 chart index, or the corner index when singular
  std::string note;
  // explicit local chart witness (smooth cases): maps fiber coordinates
  // (y1', y2') to a homogeneous point of the resolution
  std::function<NovToricPoint(const NovikovNum&, const NovikovNum&)> witness;
};

SmoothnessVerdict classify_point(const SurfacePoint& p, const ParamSet& P,
                                 double tol = 1e-7);

// collided-norm closed form: F_0 = min{sum j vx_j, psi(vy, lambda)},
// F_{n+1} = max{sum (j-n-1) vx_j + (n+1) min{0, vy}, psi(vy, lambda)},
// middle components pinned at psi(vy, lambda)
SurfacePoint degenerate_F_reduced(const TropToricPoint& p, double lambda,
                                  const ParamSet& P_collided, double tol = 1e-8);

}  // namespace syz

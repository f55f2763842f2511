#include "syz/dual_fibration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syz/reduced_area.hpp"

namespace syz {

ExtReal order_stat(std::vector<ExtReal> sample, int k) {
  if (k < 0 || k >= int(sample.size()))
    throw std::invalid_argument("order_stat: index out of range");
  std::sort(sample.begin(), sample.end(),
            [](const ExtReal& a, const ExtReal& b) { return a < b; });
  return sample[k];
}

std::vector<double> sorted_psi(double s, const ParamSet& P, double tol) {
  std::vector<double> w = psi_wall_values(s, P, tol);
  std::sort(w.begin(), w.end());
  return w;
}

double gamma_k(double s, double c, int k, const ParamSet& P, double tol) {
  std::vector<double> w = sorted_psi(s, P, tol);
  std::vector<ExtReal> sample{ExtReal(c)};
  for (double v : w) sample.emplace_back(v);
  return order_stat(std::move(sample), k).finite();
}

SurfacePoint gamma_vec(double s, double c, const ParamSet& P, double tol) {
  std::vector<double> w = sorted_psi(s, P, tol);
  w.push_back(c);
  std::sort(w.begin(), w.end());
  w.push_back(s);
  return {std::move(w)};
}

SurfacePoint corner_A(int k, double s, const ParamSet& P, double tol) {
  if (k < 0 || k > P.n()) throw std::invalid_argument("corner_A: index");
  std::vector<double> w = sorted_psi(s, P, tol);
  return gamma_vec(s, w[k], P, tol);
}

SurfacePoint j_embed(const BasePoint& q, const ParamSet& P, double tol) {
  return gamma_vec(q.s, psi(q.s, q.r, P, tol), P, tol);
}

double surface_free_value(const SurfacePoint& p, const ParamSet& P, double match_tol) {
  if (int(p.coords.size()) != P.n() + 3)
    throw std::invalid_argument("surface point has wrong length");
  double s = p.s();
  std::vector<double> w = sorted_psi(s, P);
  std::vector<double> pool(p.coords.begin(), p.coords.end() - 1);
  // delete one copy of each wall value, closest match first
  for (double psi_j : w) {
    int best = -1;
    double bestd = match_tol;
    for (int i = 0; i < int(pool.size()); ++i) {
      double d = std::abs(pool[i] - psi_j);
      if (d <= bestd) {
        bestd = d;
        best = i;
      }
    }
    if (best < 0) throw std::runtime_error("surface_free_value: not on surface");
    pool.erase(pool.begin() + best);
  }
  return pool.front();
}

BasePoint j_inverse(const SurfacePoint& p, const ParamSet& P, double match_tol) {
  double c = surface_free_value(p, P, match_tol);
  if (!(c > 0)) throw std::runtime_error("j_inverse: outside j(B) (c <= 0)");
  double s = p.s();
  return {s, psi_inverse_r(s, c, P, 1e-9)};
}

SurfacePoint F_eval(const TropToricPoint& p, const ParamSet& P, double tol) {
  if (p.n() != P.n()) throw std::invalid_argument("F_eval: size mismatch");
  int n = P.n();
  std::vector<double> w = sorted_psi(p.vy, P, tol);
  std::vector<double> coords(n + 3);
  for (int k = 0; k <= n + 1; ++k) {
    // first slot: sum_j (j-k) vx_j + k min{0, vy}; a vanishing coordinate
    // with weight 0 drops out (its slot is "free"), weights of the same sign
    // push the slot to +-inf
    ExtReal slot(double(k) * std::min(0.0, p.vy));
    for (int j = 0; j <= n + 1; ++j) slot = slot + (long long)(j - k) * p.vx[j];
    std::vector<ExtReal> sample{slot};
    for (double v : w) sample.emplace_back(v);
    coords[k] = order_stat(std::move(sample), k).finite();
  }
  coords[n + 2] = p.vy;
  return {std::move(coords)};
}

BasePoint f_eval(const TropToricPoint& p, const ParamSet& P, double tol) {
  if (!in_Y_domain(p)) throw std::domain_error("f_eval: outside the analytic domain");
  return j_inverse(F_eval(p, P, tol), P);
}

SmoothnessVerdict classify_point(const SurfacePoint& p, const ParamSet& P, double tol) {
  int n = P.n();
  double s = p.s();
  double c = surface_free_value(p, P, tol);
  std::vector<double> w = sorted_psi(s, P);

  SmoothnessVerdict v;
  if (s != 0.0) {
    // dense-torus chart around the fiber: place (1+y1')/y2' and y2' in the
    // first two homogeneous slots
    v.smooth = true;
    v.case_id = 1;
    v.note = "dense-torus chart witness";
    v.witness = [n](const NovikovNum& y1p, const NovikovNum& y2p) {
      NovikovNum opy = NovikovNum::constant(1.0, y1p.cutoff()).add(y1p);
      return chart_to_homogeneous(n, 0, y2p.inv().mul(opy), y2p);
    };
    return v;
  }

  for (int k = 0; k <= n; ++k) {
    if (std::abs(c - w[k]) <= tol) {
      v.smooth = false;
      v.case_id = 3;
      v.k0 = k;
      v.note = "corner A_" + std::to_string(k) +
               "(0): val(1+y) fails to be affine in the fiber coordinates";
      return v;
    }
  }

  // strictly between consecutive wall values (or beyond the extremes): the
  // chart at cone k0 with the (1,...,1,t^-1,t^2,t^-1,1,...,1) normalization
  int k0 = 0;
  while (k0 <= n && c > w[k0]) ++k0;
  v.smooth = true;
  v.case_id = 2;
  v.k0 = k0;
  if (k0 <= n) {
    v.note = "wall-interval chart witness at cone " + std::to_string(k0);
    v.witness = [n, k0](const NovikovNum& y1p, const NovikovNum& y2p) {
      NovikovNum opy = NovikovNum::constant(1.0, y1p.cutoff()).add(y1p);
      return chart_to_homogeneous(n, k0, y2p.inv().mul(opy), y2p);
    };
  } else {
    // top interval: cone n with the roles of the two slots exchanged
    v.note = "wall-interval chart witness at cone " + std::to_string(n) +
             " (upper placement)";
    v.witness = [n](const NovikovNum& y1p, const NovikovNum& y2p) {
      NovikovNum opy = NovikovNum::constant(1.0, y1p.cutoff()).add(y1p);
      return chart_to_homogeneous(n, n, y2p.inv(), y2p.mul(opy));
    };
  }
  return v;
}

SurfacePoint degenerate_F_reduced(const TropToricPoint& p, double lambda,
                                  const ParamSet& P_collided, double tol) {
  int n = P_collided.n();
  if (p.n() != n) throw std::invalid_argument("degenerate_F_reduced: size mismatch");
  for (int k = 0; k <= n; ++k)
    if (P_collided.root_norm(k) != lambda)
      throw std::invalid_argument("degenerate_F_reduced: norms not collided at lambda");

  double psi_l = psi(p.vy, lambda, P_collided, tol);
  std::vector<double> coords(n + 3, psi_l);

  ExtReal first(0.0);
  for (int j = 0; j <= n + 1; ++j) first = first + (long long)(j)*p.vx[j];
  coords[0] = min(first, ExtReal(psi_l)).finite();

  ExtReal last(double(n + 1) * std::min(0.0, p.vy));
  for (int j = 0; j <= n + 1; ++j) last = last + (long long)(j - n - 1) * p.vx[j];
  coords[n + 1] = max(last, ExtReal(psi_l)).finite();

  coords[n + 2] = p.vy;
  return {std::move(coords)};
}

}  // namespace syz

#include "syz/disks.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "syz/quadrature.hpp"

namespace syz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// radicand of g_k: q(zeta) = prod_{i<k} (r_k - conj(a_i) zeta) *
//                            prod_{i>=k} (r_k zeta - a_i),
// nonvanishing on the closed unit disk in the interlaced-radius regime
struct Radicand {
  double rk;
  std::vector<cplx> a;
  int k;

  cplx eval(cplx zeta) const {
    cplx q(1.0, 0.0);
    for (int i = 0; i < int(a.size()); ++i)
      q *= (i < k) ? (rk - std::conj(a[i]) * zeta) : (rk * zeta - a[i]);
    return q;
  }
  // q'/q (no zeros of q inside the disk, so this is safe there)
  cplx log_deriv(cplx zeta) const {
    cplx s(0.0, 0.0);
    for (int i = 0; i < int(a.size()); ++i)
      s += (i < k) ? (-std::conj(a[i]) / (rk - std::conj(a[i]) * zeta))
                   : (rk / (rk * zeta - a[i]));
    return s;
  }

  // log q at zeta, branch tracked continuously along the segment from 1
  cplx tracked_log(cplx zeta) const {
    cplx prev = eval(cplx(1.0, 0.0));
    cplx L = std::log(prev);
    int steps = 64;
    for (int j = 1; j <= steps; ++j) {
      cplx t = cplx(1.0, 0.0) + (zeta - cplx(1.0, 0.0)) * (double(j) / steps);
      cplx cur = eval(t);
      cplx ratio = cur / prev;
      if (std::abs(std::arg(ratio)) > 1.5) {
        // step too coarse; refine this leg
        cplx t0 = cplx(1.0, 0.0) + (zeta - cplx(1.0, 0.0)) * (double(j - 1) / steps);
        int sub = 32;
        for (int m = 1; m <= sub; ++m) {
          cplx tm = t0 + (t - t0) * (double(m) / sub);
          cplx cm = eval(tm);
          L += std::log(cm / prev);
          prev = cm;
        }
        continue;
      }
      L += std::log(ratio);
      prev = cur;
    }
    return L;
  }

  // total winding of q around the unit circle; must vanish (and in
  // particular be even) for a global square root to exist
  void check_winding() const {
    int steps = 720;
    double tot = 0.0;
    cplx prev = eval(cplx(1.0, 0.0));
    for (int j = 1; j <= steps; ++j) {
      cplx t = std::polar(1.0, 2 * kPi * double(j) / steps);
      cplx cur = eval(t);
      tot += std::arg(cur / prev);
      prev = cur;
    }
    if (std::abs(tot) > 0.5)
      throw std::runtime_error("disk_beta: branch tracking failed (odd winding)");
  }
};

}  // namespace

BasePoint pi_map(cplx u, cplx v, cplx z) {
  if (z == cplx(0.0, 0.0)) throw std::domain_error("pi_map: on removed divisor z = 0");
  return {0.5 * (std::norm(u) - std::norm(v)), std::abs(z)};
}

DiskMap disk_beta(int k, const std::set<int>& I, const ParamSet& P) {
  int n = P.n();
  if (k < 0 || k > n + 1) throw std::invalid_argument("disk_beta: chart index");
  for (int i : I)
    if (i < 0 || i >= k) throw std::invalid_argument("disk_beta: I not a subset of [k]");
  double rk = P.radii()[k];
  for (int i = 0; i <= n; ++i) {
    bool inner = i < k;
    if (inner != (P.root_norm(i) < rk))
      throw std::invalid_argument("disk_beta: radii fail interlacing at this chart");
  }

  auto rad = std::make_shared<Radicand>(Radicand{rk, P.roots(), k});
  rad->check_winding();

  std::vector<cplx> roots = P.roots();
  std::vector<int> in_u, in_v;
  for (int i = 0; i < k; ++i) (I.count(i) ? in_u : in_v).push_back(i);

  // Blaschke factor of root i at radius rk and its zeta-derivative
  auto bl = [rk, roots](int i, cplx zeta) {
    return (rk * zeta - roots[i]) / (rk - std::conj(roots[i]) * zeta);
  };
  auto bl_d = [rk, roots](int i, cplx zeta) {
    cplx den = rk - std::conj(roots[i]) * zeta;
    return (rk * rk - std::norm(roots[i])) / (den * den);
  };
  auto prod = [bl](const std::vector<int>& idx, cplx zeta) {
    cplx p(1.0, 0.0);
    for (int i : idx) p *= bl(i, zeta);
    return p;
  };
  auto prod_d = [bl, bl_d](const std::vector<int>& idx, cplx zeta) {
    cplx s(0.0, 0.0);
    for (size_t j = 0; j < idx.size(); ++j) {
      cplx t = bl_d(idx[j], zeta);
      for (size_t m = 0; m < idx.size(); ++m)
        if (m != j) t *= bl(idx[m], zeta);
      s += t;
    }
    return s;
  };

  DiskMap d;
  d.kind = "beta(" + std::to_string(k) + ")";
  d.value = [rad, prod, in_u, in_v, rk](cplx zeta) -> std::array<cplx, 3> {
    cplx g = std::exp(0.5 * rad->tracked_log(zeta));
    return {g * prod(in_u, zeta), g * prod(in_v, zeta), rk * zeta};
  };
  d.d_holo = [rad, prod, prod_d, in_u, in_v, rk](cplx zeta) -> std::array<cplx, 3> {
    cplx g = std::exp(0.5 * rad->tracked_log(zeta));
    cplx gp = 0.5 * rad->log_deriv(zeta) * g;
    cplx pu = prod(in_u, zeta), pv = prod(in_v, zeta);
    return {gp * pu + g * prod_d(in_u, zeta), gp * pv + g * prod_d(in_v, zeta),
            cplx(rk, 0.0)};
  };
  d.d_anti = [](cplx) -> std::array<cplx, 3> { return {0.0, 0.0, 0.0}; };

  // defining identity uv = h(z) on a grid (construction-time sanity check)
  double scale = std::abs(P.h(cplx(rk, 0.0))) + 1.0;
  for (int ir = 1; ir <= 4; ++ir)
    for (int it = 0; it < 8; ++it) {
      cplx zeta = std::polar(0.25 * ir, 2 * kPi * it / 8.0);
      auto w = d.value(zeta);
      if (std::abs(w[0] * w[1] - P.h(w[2])) > 1e-9 * scale)
        throw std::runtime_error("disk_beta: uv = h(z) residual too large");
    }
  return d;
}

DiskMap disk_delta(int k, double s, const ParamSet& P) {
  if (k < 0 || k > P.n()) throw std::invalid_argument("disk_delta: index");
  if (s == 0.0) throw std::invalid_argument("disk_delta: degenerate orbit disk (s = 0)");
  cplx ak = P.roots()[k];
  DiskMap d;
  d.kind = "delta(" + std::to_string(k) + ")";
  if (s > 0) {
    double c = std::sqrt(2 * s);
    d.value = [c, ak](cplx zeta) -> std::array<cplx, 3> { return {c * zeta, 0.0, ak}; };
    d.d_holo = [c](cplx) -> std::array<cplx, 3> { return {cplx(c, 0.0), 0.0, 0.0}; };
    d.d_anti = [](cplx) -> std::array<cplx, 3> { return {0.0, 0.0, 0.0}; };
  } else {
    double c = std::sqrt(2 * std::abs(s));
    d.value = [c, ak](cplx zeta) -> std::array<cplx, 3> {
      return {0.0, c * std::conj(zeta), ak};
    };
    d.d_holo = [](cplx) -> std::array<cplx, 3> { return {0.0, 0.0, 0.0}; };
    d.d_anti = [c](cplx) -> std::array<cplx, 3> { return {0.0, cplx(c, 0.0), 0.0}; };
  }
  return d;
}

namespace {

template <class Quad>
double disk_area_impl(const DiskMap& d, double tol, Quad&& engine) {
  // signed density of the pulled-back standard Kaehler form against dx dy:
  // sum_i |d w_i / d zeta|^2 - |d w_i / d zeta-bar|^2
  auto f = [&d](double rho, double th) {
    cplx zeta = std::polar(rho, th);
    auto dh = d.d_holo(zeta);
    auto da = d.d_anti(zeta);
    double dens = 0.0;
    for (int i = 0; i < 3; ++i) dens += std::norm(dh[i]) - std::norm(da[i]);
    return dens * rho / (2 * kPi);
  };
  std::vector<Rect> cells;
  for (int j = 0; j < 4; ++j)
    cells.push_back({0.0, 1.0, 2 * kPi * j / 4.0, 2 * kPi * (j + 1) / 4.0});
  QuadOptions opt;
  opt.rel_tol = tol;
  return engine(f, cells, opt);
}

}  // namespace

double disk_area(const DiskMap& d, double tol) {
  return disk_area_impl(d, tol, [](auto&& f, auto&& cells, const QuadOptions& opt) {
    return integrate_adaptive(f, cells, opt).value;
  });
}

double disk_area_serial(const DiskMap& d, double tol) {
  return disk_area_impl(d, tol, [](auto&& f, auto&& cells, const QuadOptions& opt) {
    return integrate_serial_reference(f, cells, opt).value;
  });
}

RadiusInterval lagrangian_sphere_image(const std::vector<cplx>& polyline,
                                       const ParamSet& P) {
  if (polyline.size() < 2)
    throw std::invalid_argument("lagrangian_sphere_image: need a curve");
  auto is_root = [&P](cplx z) {
    for (cplx a : P.roots())
      if (z == a) return true;
    return false;
  };
  if (!is_root(polyline.front()) || !is_root(polyline.back()))
    throw std::invalid_argument("lagrangian_sphere_image: endpoints must be roots");

  double lo = std::abs(polyline.front()), hi = lo;
  for (size_t i = 0; i + 1 < polyline.size(); ++i) {
    cplx a = polyline[i], b = polyline[i + 1];
    hi = std::max(hi, std::max(std::abs(a), std::abs(b)));
    // |z| along a segment is convex: min at the projection of 0 if interior
    cplx ab = b - a;
    double len2 = std::norm(ab);
    double seg_min;
    if (len2 == 0.0) {
      seg_min = std::abs(a);
    } else {
      double t = std::clamp(-((a.real() * ab.real() + a.imag() * ab.imag()) / len2),
                            0.0, 1.0);
      seg_min = std::abs(a + t * ab);
    }
    if (seg_min == 0.0)
      throw std::invalid_argument("lagrangian_sphere_image: curve through origin");
    lo = std::min(lo, seg_min);
  }
  return {lo, hi};
}

ParamSet half_twist_path(const ParamSet& P, int k, double t) {
  if (k < 1 || k > P.n()) throw std::invalid_argument("half_twist_path: index");
  std::vector<cplx> a = P.roots();
  cplx mid = 0.5 * (a[k - 1] + a[k]);
  cplx rot = std::polar(1.0, kPi * t);
  cplx b0 = mid + rot * (a[k - 1] - mid);
  cplx b1 = mid + rot * (a[k] - mid);
  for (int j = 0; j <= P.n(); ++j) {
    if (j == k - 1 || j == k) continue;
    if (a[j] == b0 || a[j] == b1)
      throw std::runtime_error("half_twist_path: configuration degenerate");
  }
  a[k - 1] = b0;
  a[k] = b1;
  try {
    return ParamSet(a, P.radii());
  } catch (const std::invalid_argument&) {
    return ParamSet(a);  // norms moved off the original interlacing; re-derive radii
  }
}

std::vector<double> singular_locus_radii(const ParamSet& P) {
  return P.root_norms();
}

double half_twist_collision_t0(const ParamSet& P, int k, double tol) {
  auto gap = [&](double t) {
    ParamSet Pt = half_twist_path(P, k, t);
    return std::abs(Pt.roots()[k - 1]) - std::abs(Pt.roots()[k]);
  };
  double lo = 0.0, hi = 1.0;
  double glo = gap(0.0), ghi = gap(1.0);
  if (glo == 0.0) return 0.0;
  if ((glo < 0) == (ghi < 0))
    throw std::runtime_error("half_twist_collision_t0: no sign change on [0,1]");
  while (hi - lo > tol) {
    double m = 0.5 * (lo + hi);
    double gm = gap(m);
    if (gm == 0.0) return m;
    ((gm < 0) == (glo < 0) ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

}  // namespace syz

#include "syz/reduced_area.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// polar cells covering {|z| <= r}: radial breaks at each enclosed root norm,
// angular breaks at each root argument so the s = 0 singularities sit at cell
// corners (Gauss nodes are interior, so the integrand is never evaluated at a
// singular point)
std::vector<Rect> polar_cells(double r, const ParamSet& P) {
  std::vector<double> rad{0.0, r};
  std::vector<double> ang;
  for (int k = 0; k <= P.n(); ++k) {
    double nk = P.root_norm(k);
    if (nk < r) rad.push_back(nk);
    if (nk <= r) {
      double th = std::arg(P.roots()[k]);
      if (th < 0) th += 2 * kPi;
      ang.push_back(th);
    }
  }
  ang.push_back(0.0);
  ang.push_back(2 * kPi);
  std::sort(rad.begin(), rad.end());
  rad.erase(std::unique(rad.begin(), rad.end()), rad.end());
  std::sort(ang.begin(), ang.end());
  ang.erase(std::unique(ang.begin(), ang.end()), ang.end());
  // keep angular panels below ~pi/2 for decent tensor-GL behaviour
  std::vector<double> ang2;
  for (size_t i = 0; i + 1 < ang.size(); ++i) {
    ang2.push_back(ang[i]);
    int parts = int(std::ceil((ang[i + 1] - ang[i]) / (kPi / 2)));
    for (int p = 1; p < parts; ++p)
      ang2.push_back(ang[i] + (ang[i + 1] - ang[i]) * p / parts);
  }
  ang2.push_back(2 * kPi);

  std::vector<Rect> cells;
  for (size_t i = 0; i + 1 < rad.size(); ++i)
    for (size_t j = 0; j + 1 < ang2.size(); ++j)
      cells.push_back({rad[i], rad[i + 1], ang2[j], ang2[j + 1]});
  return cells;
}

struct PsiKey {
  std::size_t pkey;
  double s, r, tol;
  bool operator<(const PsiKey& o) const {
    return std::tie(pkey, s, r, tol) < std::tie(o.pkey, o.s, o.r, o.tol);
  }
};

std::size_t param_key(const ParamSet& P) {
  std::size_t h = std::hash<int>{}(P.n());
  auto mix = [&h](double v) {
    h ^= std::hash<double>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (cplx a : P.roots()) {
    mix(a.real());
    mix(a.imag());
  }
  for (double r : P.radii()) mix(r);
  return h;
}

std::map<PsiKey, double>& psi_cache() {
  static std::map<PsiKey, double> cache;
  return cache;
}
std::mutex& psi_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

double reduced_density(cplx z, double s, const ParamSet& P) {
  double h2 = std::norm(P.h(z));
  double hp2 = std::norm(P.h_prime(z));
  return 0.5 * (hp2 / (2.0 * std::sqrt(h2 + s * s)) + 1.0);
}

QuadResult psi_quad(double s, double r, const ParamSet& P, double tol, bool parallel) {
  auto f = [&](double rho, double th) {
    cplx z = std::polar(rho, th);
    return reduced_density(z, s, P) * rho / kPi;
  };
  QuadOptions opt;
  opt.rel_tol = tol;
  opt.parallel = parallel;
  return integrate_adaptive(f, polar_cells(r, P), opt);
}

double psi(double s, double r, const ParamSet& P, double tol) {
  if (!(r > 0)) throw std::invalid_argument("psi: r must be positive");
  PsiKey key{param_key(P), s, r, tol};
  {
    std::lock_guard<std::mutex> lk(psi_cache_mutex());
    auto it = psi_cache().find(key);
    if (it != psi_cache().end()) return it->second;
  }
  double v = psi_quad(s, r, P, tol, /*parallel=*/true).value;
  std::lock_guard<std::mutex> lk(psi_cache_mutex());
  psi_cache().emplace(key, v);
  return v;
}

double psi_serial(double s, double r, const ParamSet& P, double tol) {
  auto f = [&](double rho, double th) {
    cplx z = std::polar(rho, th);
    return reduced_density(z, s, P) * rho / kPi;
  };
  QuadOptions opt;
  opt.rel_tol = tol;
  return integrate_serial_reference(f, polar_cells(r, P), opt).value;
}

McEstimate psi_oracle_mc(double s, double r, const ParamSet& P,
                         std::int64_t samples, std::uint64_t seed) {
  if (samples < 100000) throw std::invalid_argument("psi_oracle_mc: samples >= 1e5");

  // importance components: balls around enclosed roots, active near s = 0
  struct Ball {
    cplx center;
    double eps;
  };
  std::vector<Ball> balls;
  if (std::abs(s) < 0.2) {
    for (int k = 0; k <= P.n(); ++k) {
      if (P.root_norm(k) > r) continue;
      double eps = r;
      for (int j = 0; j <= P.n(); ++j)
        if (j != k) eps = std::min(eps, 0.45 * std::abs(P.roots()[k] - P.roots()[j]));
      balls.push_back({P.roots()[k], eps});
    }
  }
  double w_unif = balls.empty() ? 1.0 : 0.5;
  double w_ball = balls.empty() ? 0.0 : 0.5 / double(balls.size());
  double disk_area = kPi * r * r;

  auto mix_pdf = [&](cplx z) {
    double p = 0.0;
    if (std::abs(z) <= r) p += w_unif / disk_area;
    for (const Ball& b : balls) {
      double d = std::abs(z - b.center);
      if (d < b.eps && d > 0) p += w_ball / (2 * kPi * b.eps * d);
    }
    return p;
  };

  // chunked sampling: chunk index seeds the engine, so the estimate is
  // reproducible independent of the OpenMP schedule
  const std::int64_t chunk = 8192;
  const std::int64_t nchunks = (samples + chunk - 1) / chunk;
  std::vector<double> sums(nchunks, 0.0), sqs(nchunks, 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t c = 0; c < nchunks; ++c) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xda942042e4dd58b5ull * (c + 1));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::int64_t m = std::min(chunk, samples - c * chunk);
    double sum = 0.0, sq = 0.0;
    for (std::int64_t i = 0; i < m; ++i) {
      double pick = unit(rng);
      cplx z;
      if (pick < w_unif || balls.empty()) {
        double rho = r * std::sqrt(unit(rng));
        z = std::polar(rho, 2 * kPi * unit(rng));
      } else {
        int b = int((pick - w_unif) / w_ball);
        if (b >= int(balls.size())) b = int(balls.size()) - 1;
        double rho = balls[b].eps * unit(rng);
        z = balls[b].center + std::polar(rho, 2 * kPi * unit(rng));
      }
      double x = 0.0;
      if (std::abs(z) <= r) {
        double p = mix_pdf(z);
        if (p > 0) x = reduced_density(z, s, P) / (kPi * p);
      }
      sum += x;
      sq += x * x;
    }
    sums[c] = sum;
    sqs[c] = sq;
  }

  double sum = 0.0, sq = 0.0;
  for (std::int64_t c = 0; c < nchunks; ++c) {
    sum += sums[c];
    sq += sqs[c];
  }
  double mean = sum / double(samples);
  double var = std::max(0.0, sq / double(samples) - mean * mean);
  return {mean, std::sqrt(var / double(samples))};
}

double psi_inverse_r(double s, double c, const ParamSet& P, double tol) {
  if (!(c > 0)) throw std::invalid_argument("psi_inverse_r: c must be positive");
  // fixed dyadic bracket [0, R]: bisection midpoints land on a grid shared by
  // every inversion at this s, so the psi memoization does the heavy lifting
  double R = P.radii().back();
  int expand = 0;
  while (psi(s, R, P) < c) {
    R *= 2.0;
    if (++expand > 60) throw std::runtime_error("psi_inverse_r: bracket expansion failed");
  }
  double lo = 0.0, hi = R, mid = 0.5 * R;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    double v = psi(s, mid, P);
    if (std::abs(v - c) <= tol) return mid;
    (v < c ? lo : hi) = mid;
    if (hi - lo < 1e-15 * R) break;
  }
  return mid;
}

std::vector<double> psi_wall_values(double s, const ParamSet& P, double tol) {
  std::vector<double> out;
  out.reserve(P.n() + 1);
  for (int j = 0; j <= P.n(); ++j) out.push_back(psi(s, P.root_norm(j), P, tol));
  return out;
}

void psi_cache_clear() {
  std::lock_guard<std::mutex> lk(psi_cache_mutex());
  psi_cache().clear();
}

}  // namespace syz

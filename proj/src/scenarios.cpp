#include "syz/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "syz/disks.hpp"
#include "syz/dual_fibration.hpp"
#include "syz/mirror.hpp"
#include "syz/reduced_area.hpp"
#include "syz/toric.hpp"
#include "syz/wall_crossing.hpp"

namespace syz {

namespace {

namespace fs = std::filesystem;

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// runs one check, timing it and converting exceptions into failures
struct Checker {
  Report& rep;

  void run(const std::string& name, const std::string& anchor, double tolerance,
           const std::function<double()>& measure, bool info_only = false) {
    CheckRecord rec;
    rec.name = name;
    rec.anchor = anchor;
    rec.tolerance = tolerance;
    double t0 = now_s();
    try {
      rec.measured = measure();
      rec.status = info_only ? "info" : (rec.measured <= tolerance ? "pass" : "fail");
    } catch (const std::exception& e) {
      rec.status = "fail";
      rec.measured = std::numeric_limits<double>::quiet_NaN();
      rec.detail = e.what();
    }
    rec.runtime_s = now_s() - t0;
    rep.checks.push_back(rec);
  }
};

std::ofstream open_csv(const RunConfig& cfg, const std::string& name,
                       const std::string& header) {
  fs::create_directories(cfg.out_dir);
  std::ofstream out(fs::path(cfg.out_dir) / name);
  out << header << "\n";
  return out;
}

NovikovNum random_unit(std::mt19937_64& rng, double cutoff) {
  // valuation-0 unit with higher-order terms kept well below the lead, so
  // inverse series decay and stay short under the coefficient zero tolerance
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::uniform_real_distribution<double> c(-0.1, 0.1);
  std::uniform_real_distribution<double> e(0.2, 2.0);
  std::vector<NovikovNum::Term> terms{{0.0, cplx(1.0 + u(rng), u(rng))}};
  terms.push_back({e(rng), cplx(c(rng), c(rng))});
  terms.push_back({e(rng) + 1.0, cplx(c(rng), c(rng))});
  return NovikovNum::from_terms(std::move(terms), cutoff);
}

NovikovNum conditioned_unit(std::mt19937_64& rng, double cutoff, double s) {
  // unit for a y1 = unit * T^s whose 1 + y1 later gets inverted: the leading
  // term of 1 + y1 (the 1 for s > 0, y1 itself for s < 0) must dominate the
  // rest in l1 mass or the inverse series coefficients grow without bound
  std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> c(-0.1, 0.1);
  std::uniform_real_distribution<double> e(0.2, 2.0);
  double mag = s > 0 ? 0.5 : 2.5;
  std::vector<NovikovNum::Term> terms{{0.0, std::polar(mag, ph(rng))}};
  terms.push_back({e(rng), cplx(c(rng), c(rng))});
  terms.push_back({e(rng) + 1.0, cplx(c(rng), c(rng))});
  return NovikovNum::from_terms(std::move(terms), cutoff);
}

// ---------------------------------------------------------------- walls ----

void run_walls(const RunConfig& cfg, Report& rep) {
  Checker ck{rep};
  const int n = std::max(cfg.P().n(), 4);

  auto csv = open_csv(cfg, "beta_table.csv", "l,I,beta,delta,S...");
  for (int l = 0; l <= n; ++l) {
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      std::set<int> I;
      for (int i = 0; i < l; ++i)
        if (mask & (1u << i)) I.insert(i);
      DiskClass c = expand_beta(n, l, I);
      csv << l << ",\"{";
      bool first = true;
      for (int i : I) {
        if (!first) csv << " ";
        csv << i;
        first = false;
      }
      csv << "}\"," << c.coeff_beta << "," << c.coeff_delta;
      for (auto s : c.coeff_S) csv << "," << s;
      csv << "\n";
    }
  }

  ck.run("solver-roundtrip", "disk-class-relations", 0.0, [n]() {
    double worst = 0.0;
    for (int l = 0; l <= std::min(n, 4); ++l)
      for (unsigned mask = 0; mask < (1u << l); ++mask) {
        std::set<int> I;
        for (int i = 0; i < l; ++i)
          if (mask & (1u << i)) I.insert(i);
        DiskClass c = expand_beta(n, l, I);
        std::map<DivisorTag, long long> row;
        for (int k = 0; k <= n; ++k)
          row[DivisorTag::Du(k)] = intersect(c, DivisorTag::Du(k), RegionTag::R(l));
        DiskClass back = solve_class_from_intersections(n, l, row, RegionTag::R(l),
                                                        c.coeff_delta, c.coeff_beta);
        if (!(back == c)) worst = 1.0;
        std::map<DivisorTag, long long> rowv;
        for (int k = 0; k <= n; ++k)
          rowv[DivisorTag::Dv(k)] = intersect(c, DivisorTag::Dv(k), RegionTag::R(l));
        DiskClass backv = solve_class_from_intersections(n, l, rowv, RegionTag::R(l),
                                                         c.coeff_delta, c.coeff_beta);
        if (!(backv == c)) worst = 1.0;
      }
    return worst;
  });

  ck.run("monodromy-composite", "focus-focus-monodromy", 0.0, [n]() {
    double worst = 0.0;
    for (int l = 0; l <= n; ++l) {
      DiskClass b = DiskClass::beta(n, l);
      DiskClass out = monodromy_transport(b, l, l + 1, WallSign::Plus);
      out = monodromy_transport(out, l + 1, l, WallSign::Minus);
      DiskClass expect = DiskClass::beta(n, l);
      expect.coeff_delta = -1;
      if (!(out == expect)) worst = 1.0;
    }
    return worst;
  });

  ck.run("transport-preserves-pairings", "wall-crossing-invariance", 0.0, [n, &cfg]() {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    double worst = 0.0;
    for (int rep_i = 0; rep_i < 50; ++rep_i) {
      int l = int(rng() % (unsigned)(n + 1));
      DiskClass c = DiskClass::zero(n, l);
      c.coeff_beta = coeff(rng);
      c.coeff_delta = coeff(rng);
      for (auto& s : c.coeff_S) s = coeff(rng);
      WallSign w = (rng() & 1) ? WallSign::Plus : WallSign::Minus;
      DiskClass t = monodromy_transport(c, l, l + 1, w);
      RegionTag wall = (w == WallSign::Plus) ? RegionTag::Nplus(l) : RegionTag::Nminus(l);
      for (int k = 0; k <= n; ++k) {
        for (auto D : {DivisorTag::Du(k), DivisorTag::Dv(k)}) {
          try {
            long long a = intersect(c, D, wall);
            long long b = intersect(t, D, wall);
            if (a != b) worst = 1.0;
          } catch (const std::domain_error&) {
            // wall-obstructed pairing: nothing to compare
          }
        }
      }
      if (intersect(c, DivisorTag::anti_canonical(), wall) !=
          intersect(t, DivisorTag::anti_canonical(), wall))
        worst = 1.0;
    }
    return worst;
  });

  ck.run("energy-beta-positivity", "disk-energy-positivity", 0.0, [&cfg]() {
    const ParamSet& P = cfg.P();
    int n = P.n();
    std::vector<double> sn = P.root_norms();
    std::sort(sn.begin(), sn.end());
    double worst = 0.0;
    for (int k = 0; k <= n + 1; ++k) {
      double lo = (k == 0) ? 0.0 : sn[k - 1];
      double hi = (k == n + 1) ? sn.back() * 1.8 : sn[k];
      for (double s : {-0.4, 0.0, 0.4}) {
        BasePoint q{s, 0.5 * (lo + hi)};
        std::set<int> full;
        for (int i = 0; i < k && i <= n; ++i) full.insert(i);
        if (k > n) continue;
        double e = energy(expand_beta(n, k, full), q, P, cfg.quad_tol);
        if (!(e > 0)) worst = 1.0;
      }
    }
    return worst;
  });
}

// ------------------------------------------------------------------ psi ----

void run_psi(const RunConfig& cfg, Report& rep) {
  Checker ck{rep};
  const ParamSet& P = cfg.P();

  auto csv = open_csv(cfg, "psi_table.csv", "s,r,psi,err_est");
  for (double s : {-0.8, -0.3, 0.0, 0.3, 0.8})
    for (double r = 0.25; r <= P.radii().back() + 1e-12; r += 0.25) {
      QuadResult q = psi_quad(s, r, P, cfg.quad_tol);
      csv << s << "," << r << "," << q.value << "," << q.err_est << "\n";
    }

  ck.run("quadrature-vs-mc", "reduced-area-cross-validation", 0.0, [&]() {
    double worst = 0.0;
    std::vector<double> ss{-1.0, -0.35, 0.0, 0.35, 1.0};
    std::vector<double> rs;
    for (int i = 0; i < 5; ++i)
      rs.push_back(P.radii().front() +
                   (P.radii().back() - P.radii().front()) * i / 4.0);
    for (double s : ss)
      for (double r : rs) {
        double v = psi(s, r, P, cfg.quad_tol);
        McEstimate mc = psi_oracle_mc(s, r, P, cfg.mc_samples, cfg.seed);
        double dev = std::abs(v - mc.estimate) - 3 * (mc.std_error + cfg.quad_tol);
        worst = std::max(worst, dev);
      }
    return worst;
  });

  ck.run("increasing-in-r", "psi-monotone-radius", 0.0, [&]() {
    double worst = 0.0;
    for (int is = 0; is < 11; ++is) {
      double s = -1.0 + 0.2 * is;
      double prev = -1.0;
      for (int ir = 0; ir < 50; ++ir) {
        double r = 0.1 + (P.radii().back() - 0.1) * ir / 49.0;
        double v = psi(s, r, P, cfg.quad_tol);
        if (v <= prev) worst = 1.0;
        prev = v;
      }
    }
    return worst;
  });

  ck.run("even-in-s", "psi-symmetry", 1e-10, [&]() {
    double worst = 0.0;
    for (double s : {0.2, 0.55, 0.9})
      for (double r : {0.7, 1.8, 3.1})
        worst = std::max(worst, std::abs(psi(s, r, P, cfg.quad_tol) -
                                         psi(-s, r, P, cfg.quad_tol)));
    return worst;
  });

  ck.run("lower-bound", "psi-density-floor", 0.0, [&]() {
    double worst = 0.0;
    for (double s : {-0.7, 0.0, 0.7})
      for (double r = 0.3; r < P.radii().back(); r += 0.4)
        worst = std::max(worst, r * r / 2 - psi(s, r, P, cfg.quad_tol));
    return worst;
  });

  ck.run("parallel-vs-serial-integrator", "integrator-reference-agreement", 1e-6, [&]() {
    double worst = 0.0;
    for (double s : {-0.4, 0.0, 0.6})
      for (double r : {1.5, 3.2}) {
        double a = psi(s, r, P, cfg.quad_tol);
        double b = psi_serial(s, r, P, cfg.quad_tol);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
      }
    return worst;
  });

  // one-sided s-derivative jump at (0, |a_k|): diagnostic only
  ck.run("corner-jump-diagnostic", "psi-corner-behaviour", 0.0, [&]() {
    double h = 1e-4;
    double r = P.root_norm(0);
    double dplus = (psi(h, r, P, cfg.quad_tol) - psi(0, r, P, cfg.quad_tol)) / h;
    double dminus = (psi(0, r, P, cfg.quad_tol) - psi(-h, r, P, cfg.quad_tol)) / h;
    return std::abs(dplus - dminus);
  }, /*info_only=*/true);
}

// ---------------------------------------------------------------- areas ----

void run_areas(const RunConfig& cfg, Report& rep) {
  Checker ck{rep};
  const ParamSet& P = cfg.P();
  const int n = P.n();
  auto csv = open_csv(cfg, "disk_areas.csv", "kind,k,I,area,target");

  ck.run("beta-area-equals-psi", "action-coordinate-identity", 1e-6, [&]() {
    double worst = 0.0;
    for (int k = 0; k <= n + 1; ++k) {
      double area = disk_area(disk_beta(k, {}, P), cfg.quad_tol);
      double target = psi(0.0, P.radii()[k], P, cfg.quad_tol);
      csv << "beta," << k << ",{}," << area << "," << target << "\n";
      worst = std::max(worst, std::abs(area - target));
    }
    return worst;
  });

  ck.run("beta-areas-equal-across-I", "disk-class-area-equality", 1e-6, [&]() {
    double worst = 0.0;
    for (int k = 0; k <= n + 1; ++k) {
      double base = disk_area(disk_beta(k, {}, P), cfg.quad_tol);
      for (unsigned mask = 1; mask < (1u << std::min(k, n + 1)); ++mask) {
        std::set<int> I;
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) I.insert(i);
        double area = disk_area(disk_beta(k, I, P), cfg.quad_tol);
        worst = std::max(worst, std::abs(area - base));
      }
    }
    return worst;
  });

  ck.run("delta-area-equals-s", "orbit-disk-area", 1e-8, [&]() {
    double worst = 0.0;
    for (int k = 0; k <= n; ++k)
      for (double s : {0.8, 0.25, -0.6}) {
        double area = disk_area(disk_delta(k, s, P), cfg.quad_tol);
        csv << "delta," << k << ",," << area << "," << s << "\n";
        worst = std::max(worst, std::abs(area - s));
      }
    return worst;
  });

  ck.run("beta-boundary-on-fiber", "disk-boundary-condition", 1e-9, [&]() {
    double worst = 0.0;
    for (int k = 0; k <= n + 1; ++k) {
      DiskMap d = disk_beta(k, {}, P);
      for (int i = 0; i < 64; ++i) {
        auto wv = d.value(std::polar(1.0, 2 * 3.14159265358979323846 * i / 64.0));
        worst = std::max(worst, std::abs(std::abs(wv[0]) - std::abs(wv[1])));
        worst = std::max(worst, std::abs(std::abs(wv[2]) - P.radii()[k]));
      }
    }
    return worst;
  });

  ck.run("delta-boundary-on-wall", "orbit-disk-wall-placement", 1e-12, [&]() {
    double worst = 0.0;
    for (int k = 0; k <= n; ++k)
      for (double s : {0.5, -0.5}) {
        DiskMap d = disk_delta(k, s, P);
        auto wv = d.value(cplx(1.0, 0.0));
        BasePoint b = pi_map(wv[0], wv[1], wv[2]);
        worst = std::max(worst, std::abs(b.s - s));
        worst = std::max(worst, std::abs(b.r - P.root_norm(k)));
      }
    return worst;
  });
}

// -------------------------------------------------------------- diagram ----

std::vector<BasePoint> chart_sample_points(int k, const ParamSet& P) {
  std::vector<double> sn = P.root_norms();
  std::sort(sn.begin(), sn.end());
  int n = P.n();
  double lo = (k == 0) ? 0.0 : sn[k - 1];
  double hi = (k == n + 1) ? sn.back() * 1.6 : sn[k];
  double mid = 0.5 * (lo + hi);
  std::vector<BasePoint> out;
  out.push_back({0.4, mid});
  out.push_back({-0.3, mid});
  out.push_back({0.0, 0.5 * (lo + mid)});
  // one point in each wall neighborhood bounding U_k
  if (k <= n) {
    out.push_back({0.25, hi * (1 - 1e-7)});    // N_{k,+}
    out.push_back({-0.25, hi * (1 - 1e-7)});   // N_{k,-}
  }
  if (k >= 1) {
    out.push_back({0.25, lo * (1 + 1e-7)});    // N_{k-1,+}
    out.push_back({-0.25, lo * (1 + 1e-7)});   // N_{k-1,-}
  }
  return out;
}

void run_diagram(const RunConfig& cfg, Report& rep) {
  Checker ck{rep};
  const ParamSet& P = cfg.P();
  const int n = P.n();

  ck.run("commutative-diagram", "fibration-duality-diagram", cfg.psi_match_tol, [&]() {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int k = 0; k <= n + 1; ++k) {
      for (const BasePoint& q : chart_sample_points(k, P)) {
        for (int uc = 0; uc < 3; ++uc) {
          NovikovNum u1, u2 = random_unit(rng, cfg.novikov_cutoff);
          if (uc == 0) {
            u1 = NovikovNum::constant(1.0, cfg.novikov_cutoff);
            u2 = NovikovNum::constant(1.0, cfg.novikov_cutoff);
          } else if (uc == 2 && q.s == 0.0) {
            // deep-wall family: val(1 + y1) = tau > 0
            u1 = NovikovNum::from_terms({{0.0, -1.0}, {0.6, 1.0}}, cfg.novikov_cutoff);
          } else {
            u1 = random_unit(rng, cfg.novikov_cutoff);
          }
          MirrorPoint m = fiber_point(q, k, u1, u2, P, cfg.quad_tol);
          SurfacePoint lhs = F_eval(g_embed(m).val_point(), P, cfg.quad_tol);
          SurfacePoint rhs = j_embed(pi0_dual(m, P), P, cfg.quad_tol);
          for (size_t i = 0; i < lhs.coords.size(); ++i)
            worst = std::max(worst, std::abs(lhs.coords[i] - rhs.coords[i]));
        }
      }
    }
    return worst;
  });

  ck.run("superpotential-gluing", "superpotential-chart-matching", 0.0, [&]() {
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> sdist(0.05, 1.2);
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
      // the backward-transition roundtrip inverts 1 + y1 each rep, which
      // dominates the cost; 30 reps per chart keeps this under a minute
      for (int i = 0; i < 30; ++i) {
        double s = sdist(rng) * ((rng() & 1) ? 1.0 : -1.0);
        NovikovNum y1 = conditioned_unit(rng, cfg.novikov_cutoff, s).shift(1.0, s);
        NovikovNum y2 = random_unit(rng, cfg.novikov_cutoff).shift(1.0, sdist(rng));
        auto [t1, t2] = phi_transition(true, y1, y2);
        if (!W_local(k + 1, y1, y2).equals(W_local(k, t1, t2), 1e-9)) worst = 1.0;
        auto [b1, b2] = phi_transition(false, t1, t2);
        if (!b2.equals(y2, 1e-9)) worst = 1.0;
      }
    }
    return worst;
  });

  // tolerance is the noise floor of long unit-chain products: sub-zero-tol
  // truncation residue accumulates to ~1e-9 over these inverse chains
  ck.run("g-embed-wall-consistency", "mirror-chart-wall-identification", 1e-8, [&]() {
    std::mt19937_64 rng(cfg.seed + 2);
    double worst = 0.0;
    std::vector<double> sn = P.root_norms();
    std::sort(sn.begin(), sn.end());
    for (int k = 0; k <= n; ++k) {
      // q in a wall neighborhood between charts k and k+1 with s != 0
      for (double s : {0.3, -0.3}) {
        BasePoint q{s, sn[k] * (1 - 1e-7)};
        NovikovNum u1 = conditioned_unit(rng, cfg.novikov_cutoff, s);
        NovikovNum u2 = random_unit(rng, cfg.novikov_cutoff);
        MirrorPoint mk = fiber_point(q, k, u1, u2, P, cfg.quad_tol);
        // same fiber point presented in chart k+1 via the transition
        // (forward moves a presentation down a chart, so this is backward)
        auto [y1t, y2t] = phi_transition(false, mk.y1, mk.y2);
        MirrorPoint mk1{P.n(), k + 1, y1t, y2t, q};
        auto inv_a = torus_invariants(g_embed(mk));
        auto inv_b = torus_invariants(g_embed(mk1));
        auto coeff_gap = [](const NovikovNum& a, const NovikovNum& b) {
          double w = 0.0;
          for (const auto& t : a.sub(b).terms()) w = std::max(w, std::abs(t.coeff));
          return w;
        };
        worst = std::max(worst, coeff_gap(inv_a.first, inv_b.first));
        worst = std::max(worst, coeff_gap(inv_a.second, inv_b.second));
      }
    }
    return worst;
  });
}

// --------------------------------------------------------- observation-a ----

void run_observation_a(const RunConfig& cfg, Report& rep) {
  Checker ck{rep};
  const ParamSet& P = cfg.P();
  const int n = P.n();
  auto csv = open_csv(cfg, "divisor_sweep.csv", "i,t,f_r");
  std::vector<double> sn = P.root_norms();
  std::sort(sn.begin(), sn.end());

  ck.run("divisor-image-endpoints", "divisor-sphere-image-match", 1e-6, [&]() {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
      std::vector<double> w = sorted_psi(0.0, P, cfg.quad_tol);
      double span = w[i] - w[i - 1];
      std::vector<double> swept;
      const int m = 33;
      for (int t = 0; t < m; ++t) {
        double ct = w[i - 1] - 0.1 * span + (1.2 * span) * t / (m - 1);
        // point on the compact divisor D_i: x_i = 0, free residual ct
        std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
        vx[i] = ExtReal::pos_inf();
        vx[i + 1] = ExtReal(ct);  // slot at k = i equals (i+1-i) * ct = ct
        TropToricPoint p(std::move(vx), 0.0);
        BasePoint b = f_eval(p, P, cfg.quad_tol);
        csv << i << "," << ct << "," << b.r << "\n";
        if (b.s != 0.0) worst = std::max(worst, std::abs(b.s));
        swept.push_back(b.r);
      }
      std::sort(swept.begin(), swept.end());
      worst = std::max(worst, std::abs(swept.front() - sn[i - 1]));
      worst = std::max(worst, std::abs(swept.back() - sn[i]));
    }
    return worst;
  });

  ck.run("divisor-image-interior-gap", "divisor-image-density", 0.0, [&]() {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
      std::vector<double> w = sorted_psi(0.0, P, cfg.quad_tol);
      std::vector<double> swept;
      const int m = 65;
      for (int t = 0; t < m; ++t) {
        double ct = w[i - 1] + (w[i] - w[i - 1]) * t / (m - 1);
        std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
        vx[i] = ExtReal::pos_inf();
        vx[i + 1] = ExtReal(ct);
        BasePoint b = f_eval(TropToricPoint(std::move(vx), 0.0), P, cfg.quad_tol);
        swept.push_back(b.r);
      }
      std::sort(swept.begin(), swept.end());
      double resolution = 3.0 * (sn[i] - sn[i - 1]) / (m - 1);
      for (size_t t = 0; t + 1 < swept.size(); ++t)
        worst = std::max(worst, swept[t + 1] - swept[t] - resolution);
    }
    return worst;
  });

  ck.run("sphere-image-interval", "chain-curve-projection", 0.0, [&]() {
    double worst = 0.0;
    // roots sorted by norm; radial-monotone polar-linear chain between
    // consecutive ones
    std::vector<cplx> roots = P.roots();
    std::sort(roots.begin(), roots.end(),
              [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    for (int i = 1; i <= n; ++i) {
      cplx a = roots[i - 1], b = roots[i];
      double ra = std::abs(a), rb = std::abs(b);
      double ta = std::arg(a), tb = std::arg(b);
      if (tb - ta > 3.14159265358979323846) tb -= 2 * 3.14159265358979323846;
      if (ta - tb > 3.14159265358979323846) tb += 2 * 3.14159265358979323846;
      std::vector<cplx> poly;
      const int segs = 64;
      for (int t = 0; t <= segs; ++t) {
        double u = double(t) / segs;
        poly.push_back(std::polar(ra + (rb - ra) * u, ta + (tb - ta) * u));
      }
      poly.front() = a;
      poly.back() = b;
      RadiusInterval iv = lagrangian_sphere_image(poly, P);
      if (iv.lo != ra || iv.hi != rb) worst = 1.0;
    }
    return worst;
  });
}

// ------------------------------------------------------------- singular ----

void run_singular(const RunConfig& cfg, Report& rep) {
  Checker ck{rep};
  const ParamSet& P = cfg.P();
  const int n = P.n();

  auto csv = open_csv(cfg, "surface_slices.csv", "s,c,gamma...");
  std::vector<double> w0 = sorted_psi(0.0, P, cfg.quad_tol);
  for (double s : {-0.5, 0.0, 0.5})
    for (int j = 0; j < 40; ++j) {
      double c = 0.05 + (w0.back() + 1.0) * j / 39.0;
      SurfacePoint p = gamma_vec(s, c, P, cfg.quad_tol);
      csv << s << "," << c;
      for (double v : p.coords) csv << "," << v;
      csv << "\n";
    }

  ck.run("corners-singular", "fibration-singular-locus", 0.0, [&]() {
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
      SmoothnessVerdict v = classify_point(corner_A(k, 0.0, P, cfg.quad_tol), P,
                                           cfg.psi_match_tol);
      if (v.smooth || v.k0 != k) worst = 1.0;
    }
    return worst;
  });

  ck.run("grid-smooth-elsewhere", "smooth-locus-coverage", 0.0, [&]() {
    double worst = 0.0;
    const int m = 200;
    std::vector<double> w = w0;
    for (int is = 0; is < m; ++is) {
      double s = -1.0 + 2.0 * is / (m - 1);
      if (std::abs(s) < 1e-9) s = 0.0;
      std::vector<double> ws = sorted_psi(s, P, cfg.quad_tol);
      for (int ic = 0; ic < m; ++ic) {
        double c = 0.05 + (ws.back() + 0.8) * ic / (m - 1);
        // stay off the corner set by construction
        for (double wall : ws)
          if (std::abs(c - wall) < 5 * cfg.psi_match_tol)
            c = wall + 10 * cfg.psi_match_tol;
        SmoothnessVerdict v =
            classify_point(gamma_vec(s, c, P, cfg.quad_tol), P, cfg.psi_match_tol);
        if (!v.smooth) worst = 1.0;
        if ((is * m + ic) % 4001 == 0 && v.witness) {
          // witness smoke test: the constructed chart map produces a point
          NovikovNum y1 = NovikovNum::monomial(1.0, std::abs(s) + 0.1,
                                               cfg.novikov_cutoff);
          NovikovNum y2 = NovikovNum::monomial(1.0, c, cfg.novikov_cutoff);
          NovToricPoint pt = v.witness(y1, y2);
          if (pt.orbit_of() != "dense") worst = 1.0;
        }
      }
    }
    return worst;
  });
}

// ------------------------------------------------------------ collision ----

TropToricPoint random_trop_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int mode = int(rng() % 4);
  if (mode == 0) {
    // divisor point: one vanishing coordinate, vy = 0
    int k0 = int(rng() % (unsigned)(n + 2));
    std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
    for (int j = 0; j <= n + 1; ++j) vx[j] = ExtReal(u(rng));
    vx[k0] = ExtReal::pos_inf();
    return TropToricPoint(std::move(vx), 0.0);
  }
  if (mode == 1) {
    // orbit point: two adjacent vanishing coordinates
    int k0 = int(rng() % (unsigned)(n + 1));
    std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
    for (int j = 0; j <= n + 1; ++j) vx[j] = ExtReal(u(rng));
    vx[k0] = ExtReal::pos_inf();
    vx[k0 + 1] = ExtReal::pos_inf();
    return TropToricPoint(std::move(vx), 0.0);
  }
  double vy = (mode == 2) ? 0.0 : u(rng);
  std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    double v = u(rng);
    vx[j] = ExtReal(v);
    sum += v;
  }
  double target = (vy == 0.0) ? std::abs(u(rng)) : std::min(0.0, vy);
  vx[n + 1] = ExtReal(target - sum);
  return TropToricPoint(std::move(vx), vy);
}

void run_collision(const RunConfig& cfg, Report& rep) {
  Checker ck{rep};
  const ParamSet& P = cfg.P();
  const int n = P.n();

  // collided configuration: axis-aligned roots share the norm bit-exactly
  double lambda = 2.0;
  std::vector<cplx> ca;
  for (int k = 0; k <= n; ++k)
    ca.push_back(k % 4 == 0   ? cplx(lambda, 0)
                 : k % 4 == 1 ? cplx(0, lambda)
                 : k % 4 == 2 ? cplx(-lambda, 0)
                              : cplx(0, -lambda));
  ParamSet Pc(ca);

  ck.run("degenerate-formula-equality", "collision-order-statistics", 0.0, [&]() {
    std::mt19937_64 rng(cfg.seed + 3);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      TropToricPoint p = random_trop_point(n, rng);
      SurfacePoint a = F_eval(p, Pc, cfg.quad_tol);
      SurfacePoint b = degenerate_F_reduced(p, lambda, Pc, cfg.quad_tol);
      for (size_t j = 0; j < a.coords.size(); ++j)
        if (a.coords[j] != b.coords[j]) worst = 1.0;  // must match bit-exactly
    }
    return worst;
  });

  ck.run("compact-divisor-to-singular-image", "collided-divisor-image", 0.0, [&]() {
    double psi_l = psi(0.0, lambda, Pc, cfg.quad_tol);
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) {
      std::vector<ExtReal> vx(n + 2, ExtReal(0.3));
      vx[k] = ExtReal::pos_inf();
      SurfacePoint a = F_eval(TropToricPoint(std::move(vx), 0.0), Pc, cfg.quad_tol);
      for (int j = 0; j <= n + 1; ++j)
        worst = std::max(worst, std::abs(a.coords[j] - psi_l));
      worst = std::max(worst, std::abs(a.coords[n + 2]));
    }
    return worst;
  });

  // the twist path must start from separated norms and collide along the
  // way; spread an already-collided configuration radially first
  ParamSet Ps = [&] {
    if (P.norms_pairwise_distinct()) return P;
    std::vector<cplx> a = P.roots();
    for (int j = 0; j <= n; ++j) a[j] *= 1.0 + 0.25 * j;
    return ParamSet(a);
  }();

  auto csv = open_csv(cfg, "delta_track.csv", "t,norms...");
  ck.run("half-twist-transition", "singular-fiber-collision-path", 1e-6, [&]() {
    int k = std::min(1, n);
    double t0 = half_twist_collision_t0(Ps, k, 1e-7);
    auto count_components = [&](double t) {
      ParamSet Pt = half_twist_path(Ps, k, t);
      std::vector<double> d = Pt.distinct_norms(1e-4);
      csv << t;
      for (double nv : singular_locus_radii(Pt)) csv << "," << nv;
      csv << "\n";
      return int(d.size());
    };
    int c_before = count_components(std::max(0.0, t0 - 0.2));
    int c_at = count_components(t0);
    int c_after = count_components(std::min(1.0, t0 + 0.2));
    bool ok = c_before == n + 1 && c_at == n && c_after == n + 1;
    // t0 located to 1e-6: the norm gap at t0 must be tiny
    ParamSet Pt = half_twist_path(Ps, k, t0);
    double gap = std::abs(std::abs(Pt.roots()[k - 1]) - std::abs(Pt.roots()[k]));
    return ok ? gap : 1.0;
  });

  ck.run("half-twist-endpoints", "half-twist-path-shape", 1e-12, [&]() {
    int k = std::min(1, n);
    ParamSet P0 = half_twist_path(Ps, k, 0.0);
    ParamSet P1 = half_twist_path(Ps, k, 1.0);
    double worst = 0.0;
    for (int j = 0; j <= n; ++j)
      worst = std::max(worst, std::abs(P0.roots()[j] - Ps.roots()[j]));
    worst = std::max(worst, std::abs(P1.roots()[k - 1] - Ps.roots()[k]));
    worst = std::max(worst, std::abs(P1.roots()[k] - Ps.roots()[k - 1]));
    return worst;
  });
}

}  // namespace

const ParamSet& RunConfig::P() const {
  static const ParamSet ref = ParamSet::reference_a2();
  return params ? *params : ref;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig cfg;
  if (j.contains("params")) cfg.params = ParamSet::from_json(j.at("params"));
  if (j.contains("precision")) {
    const auto& p = j.at("precision");
    if (p.contains("quad_tol")) cfg.quad_tol = p.at("quad_tol").get<double>();
    if (p.contains("mc_samples"))
      cfg.mc_samples = p.at("mc_samples").get<std::int64_t>();
    if (p.contains("novikov_cutoff"))
      cfg.novikov_cutoff = p.at("novikov_cutoff").get<double>();
    if (p.contains("psi_match_tol"))
      cfg.psi_match_tol = p.at("psi_match_tol").get<double>();
  }
  if (j.contains("scenario")) cfg.scenario = j.at("scenario").get<std::string>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
  return cfg;
}

bool Report::all_pass() const {
  for (const CheckRecord& c : checks)
    if (c.status == "fail") return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckRecord& c : checks)
    arr.push_back({{"name", c.name},
                   {"anchor", c.anchor},
                   {"status", c.status},
                   {"measured", c.measured},
                   {"tolerance", c.tolerance},
                   {"runtime_s", c.runtime_s},
                   {"detail", c.detail}});
  return {{"scenario", scenario}, {"checks", arr}, {"all_pass", all_pass()}};
}

std::vector<std::string> scenario_names() {
  return {"walls", "psi", "areas", "diagram", "observation-a", "singular", "collision"};
}

Report run_scenario(const RunConfig& cfg) {
  Report rep;
  rep.scenario = cfg.scenario;
  if (cfg.scenario == "walls")
    run_walls(cfg, rep);
  else if (cfg.scenario == "psi")
    run_psi(cfg, rep);
  else if (cfg.scenario == "areas")
    run_areas(cfg, rep);
  else if (cfg.scenario == "diagram")
    run_diagram(cfg, rep);
  else if (cfg.scenario == "observation-a")
    run_observation_a(cfg, rep);
  else if (cfg.scenario == "singular")
    run_singular(cfg, rep);
  else if (cfg.scenario == "collision")
    run_collision(cfg, rep);
  else
    throw std::invalid_argument("unknown scenario: " + cfg.scenario);

  fs::create_directories(cfg.out_dir);
  std::ofstream out(fs::path(cfg.out_dir) / "report.json");
  out << rep.to_json().dump(2) << "\n";
  return rep;
}

}  // namespace syz

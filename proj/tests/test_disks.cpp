#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "syz/disks.hpp"

using namespace syz;

static const ParamSet& P() {
  static ParamSet p = ParamSet::reference_a2();
  return p;
}

static constexpr double kPi = 3.14159265358979323846;

TEST_CASE("pi_map reads off (s, r)") {
  BasePoint b = pi_map(cplx(2, 0), cplx(1, 0), cplx(0, 1.5));
  CHECK(b.s == doctest::Approx(1.5).epsilon(1e-12));  // (|u|^2 - |v|^2)/2
  CHECK(b.r == doctest::Approx(1.5));
  CHECK_THROWS(pi_map(cplx(1, 0), cplx(1, 0), cplx(0, 0)));
}

TEST_CASE("beta disk satisfies uv = h(z) on the closed disk") {
  for (int k = 0; k <= P().n() + 1; ++k) {
    DiskMap d = disk_beta(k, {}, P());
    for (double rho : {0.0, 0.35, 0.8, 1.0})
      for (int i = 0; i < 12; ++i) {
        cplx zeta = std::polar(rho, 2 * kPi * i / 12.0 + 0.1);
        auto w = d.value(zeta);
        cplx lhs = w[0] * w[1];
        cplx rhs = P().h(w[2]);
        CHECK(std::abs(lhs - rhs) < 1e-8 * (1.0 + std::abs(rhs)));
      }
  }
}

TEST_CASE("beta disk boundary lies on the fiber torus over (0, r_k)") {
  for (int k = 0; k <= P().n() + 1; ++k) {
    std::set<int> I;
    if (k >= 1) I.insert(0);
    DiskMap d = disk_beta(k, I, P());
    for (int i = 0; i < 32; ++i) {
      auto w = d.value(std::polar(1.0, 2 * kPi * i / 32.0));
      CHECK(std::abs(w[0]) == doctest::Approx(std::abs(w[1])).epsilon(1e-9));
      CHECK(std::abs(w[2]) == doctest::Approx(P().radii()[k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("beta disk z-component winds once") {
  DiskMap d = disk_beta(2, {}, P());
  double total = 0.0;
  cplx prev = d.value(cplx(1.0, 0.0))[2];
  for (int i = 1; i <= 256; ++i) {
    cplx cur = d.value(std::polar(1.0, 2 * kPi * i / 256.0))[2];
    total += std::arg(cur / prev);
    prev = cur;
  }
  CHECK(total == doctest::Approx(2 * kPi).epsilon(1e-6));
}

TEST_CASE("beta disk is holomorphic (anti-derivative vanishes)") {
  DiskMap d = disk_beta(1, {0}, P());
  for (double rho : {0.3, 0.9})
    for (int i = 0; i < 8; ++i) {
      auto da = d.d_anti(std::polar(rho, 2 * kPi * i / 8.0 + 0.05));
      for (int j = 0; j < 3; ++j) CHECK(std::abs(da[j]) < 1e-12);
    }
}

TEST_CASE("beta disk area equals psi(0, r_k), independent of I") {
  double tol = 1e-8;
  for (int k : {1, 2}) {
    double target = psi(0.0, P().radii()[k], P(), tol);
    double base = disk_area(disk_beta(k, {}, P()), tol);
    CHECK(base == doctest::Approx(target).epsilon(1e-7));
    std::set<int> I{0};
    CHECK(disk_area(disk_beta(k, I, P()), tol) == doctest::Approx(base).epsilon(1e-7));
  }
}

TEST_CASE("serial and parallel disk areas agree") {
  DiskMap d = disk_beta(2, {1}, P());
  CHECK(disk_area(d, 1e-8) == doctest::Approx(disk_area_serial(d, 1e-8)).epsilon(1e-6));
}

TEST_CASE("orbit disk has area s, signed") {
  for (int k = 0; k <= P().n(); ++k)
    for (double s : {0.9, 0.3, -0.45}) {
      double a = disk_area(disk_delta(k, s, P()), 1e-8);
      CHECK(a == doctest::Approx(s).epsilon(1e-8));
    }
}

TEST_CASE("orbit disk sits over the wall point (s, |a_k|)") {
  DiskMap d = disk_delta(1, 0.5, P());
  auto w = d.value(std::polar(1.0, 1.2));
  BasePoint b = pi_map(w[0], w[1], w[2]);
  CHECK(b.s == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.r == doctest::Approx(P().root_norm(1)).epsilon(1e-12));
  // the z-component is constant at the root
  CHECK(std::abs(w[2] - P().roots()[1]) < 1e-12);
}

TEST_CASE("orbit disk at s = 0 degenerates") {
  CHECK_THROWS_WITH_AS(disk_delta(0, 0.0, P()), doctest::Contains("degenerate"),
                       std::invalid_argument);
}

TEST_CASE("anti-holomorphic orbit disk for s < 0") {
  DiskMap d = disk_delta(0, -0.3, P());
  auto dh = d.d_holo(cplx(0.4, 0.1));
  auto da = d.d_anti(cplx(0.4, 0.1));
  // the varying coordinate moves anti-holomorphically
  double holo = 0, anti = 0;
  for (int j = 0; j < 3; ++j) {
    holo += std::abs(dh[j]);
    anti += std::abs(da[j]);
  }
  CHECK(anti > 1e-6);
  CHECK(holo < 1e-12);
}

TEST_CASE("sphere image is the radius interval between the endpoint norms") {
  std::vector<cplx> seg{P().roots()[0], P().roots()[1]};
  RadiusInterval iv = lagrangian_sphere_image(seg, P());
  // the straight chord from 1 to 2i dips below |a_0| = 1
  CHECK(iv.hi == doctest::Approx(2.0));
  CHECK(iv.lo < 1.0);
  CHECK(iv.lo == doctest::Approx(std::abs(cplx(0.8, 0.4))).epsilon(1e-9));
}

TEST_CASE("sphere image demands root endpoints") {
  CHECK_THROWS(lagrangian_sphere_image({cplx(1, 0), cplx(5, 5)}, P()));
  CHECK_THROWS(lagrangian_sphere_image({cplx(1, 0), cplx(-1, 0), cplx(0, 2)}, P()));
}

TEST_CASE("half twist path endpoints and collision moment") {
  ParamSet P0 = half_twist_path(P(), 1, 0.0);
  for (int j = 0; j <= P().n(); ++j)
    CHECK(std::abs(P0.roots()[j] - P().roots()[j]) < 1e-12);

  ParamSet P1 = half_twist_path(P(), 1, 1.0);
  CHECK(std::abs(P1.roots()[0] - P().roots()[1]) < 1e-12);
  CHECK(std::abs(P1.roots()[1] - P().roots()[0]) < 1e-12);

  double t0 = half_twist_collision_t0(P(), 1, 1e-8);
  ParamSet Pt = half_twist_path(P(), 1, t0);
  CHECK(std::abs(Pt.roots()[0]) == doctest::Approx(std::abs(Pt.roots()[1])).epsilon(1e-7));
  CHECK(t0 > 0.0);
  CHECK(t0 < 1.0);
  CHECK(int(Pt.distinct_norms(1e-4).size()) == P().n());
}

TEST_CASE("singular locus radii are the root norms") {
  std::vector<double> r = singular_locus_radii(P());
  REQUIRE(int(r.size()) == P().n() + 1);
  for (int j = 0; j <= P().n(); ++j) CHECK(r[j] == P().root_norm(j));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "syz/reduced_area.hpp"

using namespace syz;

static const ParamSet& P() {
  static ParamSet p = ParamSet::reference_a2();
  return p;
}

TEST_CASE("density is bounded below by 1/2") {
  for (double x : {-3.5, -1.0, 0.0, 1.0, 2.5})
    for (double y : {-2.0, 0.0, 1.5})
      for (double s : {-0.5, 0.0, 0.8})
        CHECK(reduced_density(cplx(x, y), s, P()) >= 0.5);
}

TEST_CASE("density is integrable at the roots: psi finite at s = 0") {
  // |h'|^2 / sqrt(|h|^2) ~ 1/|z - a_k| near a simple root
  double v = psi(0.0, 3.5, P(), 1e-7);
  CHECK(std::isfinite(v));
  CHECK(v > 3.5 * 3.5 / 2);
}

TEST_CASE("psi lower bound r^2/2 and monotonicity in r") {
  double prev = -1.0;
  for (double r = 0.4; r < 4.0; r += 0.4) {
    double v = psi(0.3, r, P(), 1e-7);
    CHECK(v >= r * r / 2);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("psi even and monotone-decreasing in |s|") {
  double v0 = psi(0.0, 2.5, P(), 1e-8);
  double vp = psi(0.7, 2.5, P(), 1e-8);
  double vm = psi(-0.7, 2.5, P(), 1e-8);
  CHECK(vp == doctest::Approx(vm).epsilon(1e-9));
  CHECK(vp < v0);  // smoothing the sqrt shrinks the density
}

TEST_CASE("memoized psi is bit-stable across calls") {
  double a = psi(0.12, 1.7, P(), 1e-8);
  double b = psi(0.12, 1.7, P(), 1e-8);
  CHECK(a == b);
}

TEST_CASE("parallel adaptive vs serial reference") {
  for (double s : {0.0, -0.4})
    for (double r : {1.5, 3.2}) {
      double a = psi(s, r, P(), 1e-8);
      double b = psi_serial(s, r, P(), 1e-8);
      CHECK(a == doctest::Approx(b).epsilon(1e-6));
    }
}

TEST_CASE("quadrature error estimate is honest against MC") {
  for (double s : {0.0, 0.5})
    for (double r : {1.5, 3.0}) {
      double v = psi(s, r, P(), 1e-8);
      McEstimate mc = psi_oracle_mc(s, r, P(), 400000, 7);
      CHECK(std::abs(v - mc.estimate) < 4 * mc.std_error + 1e-6);
    }
}

TEST_CASE("mc oracle is deterministic in the seed") {
  McEstimate a = psi_oracle_mc(0.1, 2.0, P(), 200000, 42);
  McEstimate b = psi_oracle_mc(0.1, 2.0, P(), 200000, 42);
  CHECK(a.estimate == b.estimate);
  McEstimate c = psi_oracle_mc(0.1, 2.0, P(), 200000, 43);
  CHECK(a.estimate != c.estimate);
}

TEST_CASE("mc oracle rejects tiny sample counts") {
  CHECK_THROWS(psi_oracle_mc(0.0, 2.0, P(), 100, 1));
}

TEST_CASE("psi_inverse_r round trip") {
  for (double s : {0.0, 0.6, -0.6})
    for (double r : {0.8, 1.9, 3.4}) {
      double c = psi(s, r, P(), 1e-8);
      double rr = psi_inverse_r(s, c, P(), 1e-9);
      // the inverter stops on a 1e-9 value residual
      CHECK(std::abs(psi(s, rr, P(), 1e-8) - c) <= 2e-9);
      CHECK(rr == doctest::Approx(r).epsilon(1e-6));
    }
}

TEST_CASE("wall values are the psi values at the root norms, sorted input order") {
  std::vector<double> w = psi_wall_values(0.25, P(), 1e-8);
  REQUIRE(int(w.size()) == P().n() + 1);
  for (int k = 0; k <= P().n(); ++k)
    CHECK(w[k] == psi(0.25, P().root_norm(k), P(), 1e-8));
}

TEST_CASE("collided norms give equal wall values") {
  ParamSet Pc({cplx(2, 0), cplx(0, 2), cplx(-2, 0)});
  std::vector<double> w = psi_wall_values(0.0, Pc, 1e-8);
  CHECK(w[0] == w[1]);
  CHECK(w[1] == w[2]);
}

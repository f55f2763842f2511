#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "syz/reduced_area.hpp"
#include "syz/wall_crossing.hpp"

using namespace syz;

TEST_CASE("expand_beta worked example: n = 2, l = 2, I = {0}") {
  DiskClass c = expand_beta(2, 2, {0});
  CHECK(c.coeff_beta == 1);
  CHECK(c.coeff_delta == 1);
  CHECK(c.coeff_S[0] == -1);  // |I cap [1]| = 1
  CHECK(c.coeff_S[1] == -1);  // |I cap [2]| = 1
}

TEST_CASE("expand_beta with empty I is beta itself") {
  CHECK(expand_beta(3, 2, {}) == DiskClass::beta(3, 2));
}

TEST_CASE("expand_beta rejects bad I") {
  CHECK_THROWS(expand_beta(2, 1, {1}));
  CHECK_THROWS(expand_beta(2, 3, {}));
}

TEST_CASE("pairing rows: beta meets each Dv below the anchor once, no Du") {
  int n = 3;
  for (int l = 0; l <= n; ++l) {
    DiskClass b = DiskClass::beta(n, l);
    for (int k = 0; k <= n; ++k) {
      CHECK(intersect(b, DivisorTag::Du(k), RegionTag::R(l)) == 0);
      CHECK(intersect(b, DivisorTag::Dv(k), RegionTag::R(l)) == (k < l ? 1 : 0));
    }
    CHECK(intersect(b, DivisorTag::anti_canonical(), RegionTag::R(l)) == 1);
  }
}

TEST_CASE("pairing rows: delta and spheres") {
  int n = 3, l = 2;
  DiskClass d = DiskClass::delta(n, l);
  CHECK(intersect(d, DivisorTag::Du(2), RegionTag::R(l)) == 1);
  CHECK(intersect(d, DivisorTag::Dv(2), RegionTag::R(l)) == -1);
  CHECK(intersect(d, DivisorTag::Du(1), RegionTag::R(l)) == 0);
  CHECK(intersect(d, DivisorTag::anti_canonical(), RegionTag::R(l)) == 0);

  DiskClass s2 = DiskClass::sphere(n, l, 2);
  CHECK(intersect(s2, DivisorTag::Du(2), RegionTag::R(l)) == 1);
  CHECK(intersect(s2, DivisorTag::Du(1), RegionTag::R(l)) == -1);
  CHECK(intersect(s2, DivisorTag::Dv(2), RegionTag::R(l)) == -1);
  CHECK(intersect(s2, DivisorTag::Dv(1), RegionTag::R(l)) == 1);
  CHECK(intersect(s2, DivisorTag::anti_canonical(), RegionTag::R(l)) == 0);
}

TEST_CASE("outermost anchor uses delta_n") {
  int n = 2;
  DiskClass d = DiskClass::delta(n, n + 1);
  CHECK(d.delta_index() == n);
  CHECK(intersect(d, DivisorTag::Du(n), RegionTag::Nplus(n)) == 1);
}

TEST_CASE("wall-obstructed pairings throw, values elsewhere region-independent") {
  int n = 2, l = 1;
  DiskClass c = expand_beta(n, l, {0});
  CHECK_THROWS_AS(intersect(c, DivisorTag::Du(1), RegionTag::Nminus(1)),
                  std::domain_error);
  CHECK_THROWS_AS(intersect(c, DivisorTag::Dv(1), RegionTag::Nplus(1)),
                  std::domain_error);
  // defined pairings agree across every region in the chart's domain
  long long v = intersect(c, DivisorTag::Dv(0), RegionTag::R(l));
  CHECK(intersect(c, DivisorTag::Dv(0), RegionTag::Nplus(1)) == v);
  CHECK(intersect(c, DivisorTag::Dv(0), RegionTag::Nminus(0)) == v);
}

TEST_CASE("regions outside the anchor chart's closure throw") {
  DiskClass c = DiskClass::beta(3, 1);
  CHECK_THROWS_AS(intersect(c, DivisorTag::Du(0), RegionTag::R(2)), std::domain_error);
  CHECK_THROWS_AS(intersect(c, DivisorTag::Du(0), RegionTag::Nplus(2)), std::domain_error);
}

TEST_CASE("solver inverts the pairing on both Du and Dv rows") {
  int n = 3;
  for (int l = 0; l <= n; ++l) {
    DiskClass c = DiskClass::zero(n, l);
    c.coeff_beta = 2;
    c.coeff_delta = -1;
    c.coeff_S = {3, 0, -2};
    std::map<DivisorTag, long long> row;
    for (int k = 0; k <= n; ++k)
      row[DivisorTag::Du(k)] = intersect(c, DivisorTag::Du(k), RegionTag::R(l));
    CHECK(solve_class_from_intersections(n, l, row, RegionTag::R(l), -1, 2) == c);

    std::map<DivisorTag, long long> rowv;
    for (int k = 0; k <= n; ++k)
      rowv[DivisorTag::Dv(k)] = intersect(c, DivisorTag::Dv(k), RegionTag::R(l));
    CHECK(solve_class_from_intersections(n, l, rowv, RegionTag::R(l), -1, 2) == c);
  }
}

TEST_CASE("solver consistency check rejects impossible rows") {
  int n = 2, l = 1;
  std::map<DivisorTag, long long> row;
  row[DivisorTag::Du(0)] = 1;  // s_1 = -1
  row[DivisorTag::Du(1)] = 0;  // with delta = 0: s_2 = -1
  row[DivisorTag::Du(2)] = 0;  // needs s_3 = -1 != 0
  CHECK_THROWS_AS(solve_class_from_intersections(n, l, row, RegionTag::R(l), 0),
                  std::runtime_error);
  row[DivisorTag::Du(2)] = -1;  // closes the telescoping sum
  DiskClass c = solve_class_from_intersections(n, l, row, RegionTag::R(l), 0);
  CHECK(c.coeff_S[0] == -1);
  CHECK(c.coeff_S[1] == -1);
}

TEST_CASE("zero targets with zero boundary give the zero class") {
  int n = 2, l = 0;
  std::map<DivisorTag, long long> row;
  for (int k = 0; k <= n; ++k) row[DivisorTag::Du(k)] = 0;
  CHECK(solve_class_from_intersections(n, l, row, RegionTag::R(l), 0, 0) ==
        DiskClass::zero(n, l));
}

TEST_CASE("transport round trips and matches the basic wall relations") {
  int n = 3;
  for (int l = 0; l <= n; ++l)
    for (WallSign w : {WallSign::Plus, WallSign::Minus}) {
      DiskClass c = DiskClass::zero(n, l);
      c.coeff_beta = 2;
      c.coeff_delta = 1;
      c.coeff_S = {1, -1, 0};
      DiskClass fwd = monodromy_transport(c, l, l + 1, w);
      DiskClass back = monodromy_transport(fwd, l + 1, l, w);
      CHECK(back == c);
    }

  // across N_{l,+}: beta_l |-> beta_{l+1} with the same boundary sigma part
  DiskClass b = DiskClass::beta(n, 1);
  DiskClass t = monodromy_transport(b, 1, 2, WallSign::Plus);
  CHECK(t.coeff_beta == 1);
  CHECK(t.coeff_delta == 0);
  // across N_{l,-}: beta_l |-> beta_{l+1} + delta
  DiskClass tm = monodromy_transport(b, 1, 2, WallSign::Minus);
  CHECK(tm.coeff_delta == 1);
  CHECK(tm.coeff_S[1] == -1);
}

TEST_CASE("focus-focus composite: around the wall once is beta - delta") {
  int n = 2;
  for (int l = 0; l <= n; ++l) {
    DiskClass b = DiskClass::beta(n, l);
    DiskClass once =
        monodromy_transport(monodromy_transport(b, l, l + 1, WallSign::Plus), l + 1,
                            l, WallSign::Minus);
    DiskClass expect = DiskClass::beta(n, l);
    expect.coeff_delta = -1;
    CHECK(once == expect);
  }
}

TEST_CASE("transport preserves every defined pairing") {
  int n = 2, l = 1;
  DiskClass c = DiskClass::zero(n, l);
  c.coeff_beta = 1;
  c.coeff_delta = 2;
  c.coeff_S = {-1, 1};
  for (WallSign w : {WallSign::Plus, WallSign::Minus}) {
    DiskClass t = monodromy_transport(c, l, l + 1, w);
    RegionTag wall = (w == WallSign::Plus) ? RegionTag::Nplus(l) : RegionTag::Nminus(l);
    for (int k = 0; k <= n; ++k)
      for (DivisorTag D : {DivisorTag::Du(k), DivisorTag::Dv(k)}) {
        bool obstructed = (D.kind == DivisorTag::Kind::Du &&
                           wall.kind == RegionTag::Kind::Nminus && D.k == l) ||
                          (D.kind == DivisorTag::Kind::Dv &&
                           wall.kind == RegionTag::Kind::Nplus && D.k == l);
        if (obstructed) continue;
        CHECK(intersect(c, D, wall) == intersect(t, D, wall));
      }
  }
}

TEST_CASE("energy of the basis classes") {
  ParamSet P = ParamSet::reference_a2();
  BasePoint q{0.4, 1.5};
  int n = P.n(), l = 1;
  double tol = 1e-8;
  CHECK(energy(DiskClass::delta(n, l), q, P, tol) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(energy(DiskClass::sphere(n, l, 1), q, P, tol) == 0.0);
  double eb = energy(DiskClass::beta(n, l), q, P, tol);
  CHECK(eb == doctest::Approx(psi(0.4, 1.5, P, tol)).epsilon(1e-12));

  // negative s picks up the -l min{0, s} correction
  BasePoint qm{-0.4, 1.5};
  CHECK(energy(DiskClass::beta(n, l), qm, P, tol) ==
        doctest::Approx(psi(-0.4, 1.5, P, tol) + 0.4).epsilon(1e-12));

  CHECK_THROWS_AS(energy(DiskClass::beta(n, 0), q, P, tol), std::domain_error);
}

TEST_CASE("json serialization of a class") {
  DiskClass c = expand_beta(2, 2, {0, 1});
  nlohmann::json j = c.to_json();
  CHECK(j["beta"] == 1);
  CHECK(j["delta"] == 2);
  CHECK(j["S"][0] == -1);
  CHECK(j["S"][1] == -2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "syz/dual_fibration.hpp"
#include "syz/mirror.hpp"
#include "syz/reduced_area.hpp"

using namespace syz;

static const ParamSet& P() {
  static ParamSet p = ParamSet::reference_a2();
  return p;
}

TEST_CASE("order statistics with infinities") {
  std::vector<ExtReal> v{ExtReal(3.0), ExtReal::pos_inf(), ExtReal(1.0),
                         ExtReal::neg_inf()};
  CHECK(order_stat(v, 0).is_neg_inf());
  CHECK(order_stat(v, 1) == ExtReal(1.0));
  CHECK(order_stat(v, 2) == ExtReal(3.0));
  CHECK(order_stat(v, 3).is_pos_inf());
  CHECK_THROWS(order_stat(v, 4));
}

TEST_CASE("gamma coordinates are the sorted multiset {walls} + {c}") {
  double s = 0.25, c = 7.0, tol = 1e-8;
  SurfacePoint p = gamma_vec(s, c, P(), tol);
  REQUIRE(int(p.coords.size()) == P().n() + 3);
  CHECK(p.s() == s);
  for (size_t i = 0; i + 2 < p.coords.size(); ++i)
    CHECK(p.coords[i] <= p.coords[i + 1]);
  for (int k = 0; k <= P().n() + 1; ++k)
    CHECK(p.coords[k] == gamma_k(s, c, k, P(), tol));
}

TEST_CASE("j embeds the base and j_inverse undoes it") {
  double tol = 1e-8;
  for (double s : {0.0, 0.6, -0.6})
    for (double r : {0.7, 1.5, 2.6, 3.8}) {
      SurfacePoint p = j_embed({s, r}, P(), tol);
      BasePoint back = j_inverse(p, P());
      CHECK(back.s == s);
      CHECK(back.r == doctest::Approx(r).epsilon(1e-6));
    }
}

TEST_CASE("surface_free_value rejects off-surface points") {
  SurfacePoint p = j_embed({0.2, 1.5}, P(), 1e-8);
  // coords sorted: [w_0, c, w_1, w_2, s] since psi(0.2, 1.5) lies between the
  // first two wall values; slot 2 holds a wall value
  p.coords[2] += 0.5;
  CHECK_THROWS_WITH_AS(surface_free_value(p, P()), doctest::Contains("not on surface"),
                       std::runtime_error);
}

TEST_CASE("j_inverse needs c > 0") {
  SurfacePoint p = gamma_vec(0.1, -1.0, P(), 1e-8);
  CHECK_THROWS_WITH_AS(j_inverse(p, P()), doctest::Contains("outside j(B)"),
                       std::runtime_error);
}

TEST_CASE("F on a dense-torus tropical point tracks the free slot") {
  double tol = 1e-8;
  int n = P().n();
  // point with weighted sums c at every slot k = 0: vx = (c, 0, ..., 0, -c)?
  // simpler: vx_1 = c/1 at slot 0 means sum_j (j-0) vx_j = c
  double c = 5.0;
  std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
  vx[1] = ExtReal(c);
  vx[n + 1] = ExtReal(-c);
  TropToricPoint p(vx, 0.0);
  SurfacePoint F = F_eval(p, P(), tol);
  std::vector<double> w = sorted_psi(0.0, P(), tol);
  // slot k: (1-k) c + (n+1-k)(-c) = -(n+2k) c/...; negative for all k >= 0 when
  // c > 0, so every slot falls below the walls: F_k = min(slot, walls) at k = 0,
  // the walls fill the rest
  CHECK(F.coords[0] == c - (n + 1) * c);
  for (int k = 1; k <= n + 1; ++k) CHECK(F.coords[k] == w[k - 1]);
  CHECK(F.coords[n + 2] == 0.0);
}

TEST_CASE("F matches j on embedded mirror fiber points") {
  double tol = 1e-8;
  NovikovNum u = NovikovNum::from_terms({{0.0, 1.0}, {0.5, 0.5}}, 500.0);
  for (int k : {0, 1, 2, 3}) {
    BasePoint q{0.35, P().radii()[k]};
    MirrorPoint m = fiber_point(q, k, u, u, P(), tol);
    SurfacePoint lhs = F_eval(g_embed(m).val_point(), P(), tol);
    SurfacePoint rhs = j_embed(pi0_dual(m, P(), 1e-9), P(), tol);
    REQUIRE(lhs.coords.size() == rhs.coords.size());
    for (size_t i = 0; i < lhs.coords.size(); ++i)
      CHECK(lhs.coords[i] == doctest::Approx(rhs.coords[i]).epsilon(1e-7));
  }
}

TEST_CASE("divisor points: the vanishing slot is freed and clamped by the walls") {
  double tol = 1e-8;
  int n = P().n();
  std::vector<double> w = sorted_psi(0.0, P(), tol);
  // x_1 = 0 with residual slot value c between the walls
  double c = 0.5 * (w[0] + w[1]);
  std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
  vx[1] = ExtReal::pos_inf();
  vx[2] = ExtReal(c);
  SurfacePoint F = F_eval(TropToricPoint(vx, 0.0), P(), tol);
  CHECK(F.coords[0] == w[0]);  // slot 0 is +inf, pushed onto the lowest wall
  CHECK(F.coords[1] == c);     // the freed slot carries c
  CHECK(F.coords[2] == w[1]);
  CHECK(F.coords[3] == w[2]);
}

TEST_CASE("torus-fixed points map to the corners") {
  double tol = 1e-8;
  int n = P().n();
  std::vector<ExtReal> vx(n + 2, ExtReal(0.2));
  vx[1] = ExtReal::pos_inf();
  vx[2] = ExtReal::pos_inf();
  SurfacePoint F = F_eval(TropToricPoint(vx, 0.0), P(), tol);
  SurfacePoint A = corner_A(1, 0.0, P(), tol);
  for (size_t i = 0; i < F.coords.size(); ++i)
    CHECK(F.coords[i] == doctest::Approx(A.coords[i]).epsilon(1e-12));
}

TEST_CASE("f_eval needs the analytic domain") {
  int n = P().n();
  std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
  vx[0] = ExtReal(5.0);   // weight 0: weighted sum stays 0
  vx[1] = ExtReal(-5.0);
  vx[2] = ExtReal(0.0);
  vx[3] = ExtReal(0.0);
  CHECK_THROWS_WITH_AS(f_eval(TropToricPoint(vx, 0.0), P(), 1e-8),
                       doctest::Contains("analytic domain"), std::domain_error);
}

TEST_CASE("classification: torus case, wall-interval case, corners") {
  double tol = 1e-7;
  SurfacePoint p1 = j_embed({0.4, 1.5}, P(), 1e-8);
  SmoothnessVerdict v1 = classify_point(p1, P(), tol);
  CHECK(v1.smooth);
  CHECK(v1.case_id == 1);
  REQUIRE(v1.witness);

  std::vector<double> w = sorted_psi(0.0, P(), 1e-8);
  SmoothnessVerdict v2 =
      classify_point(gamma_vec(0.0, 0.5 * (w[0] + w[1]), P(), 1e-8), P(), tol);
  CHECK(v2.smooth);
  CHECK(v2.case_id == 2);
  CHECK(v2.k0 == 1);

  SmoothnessVerdict vbelow = classify_point(gamma_vec(0.0, 0.5 * w[0], P(), 1e-8),
                                            P(), tol);
  CHECK(vbelow.k0 == 0);
  SmoothnessVerdict vtop = classify_point(gamma_vec(0.0, w[2] + 1.0, P(), 1e-8),
                                          P(), tol);
  CHECK(vtop.smooth);
  CHECK(vtop.k0 == P().n() + 1);
  REQUIRE(vtop.witness);

  for (int k = 0; k <= P().n(); ++k) {
    SmoothnessVerdict vc = classify_point(corner_A(k, 0.0, P(), 1e-8), P(), tol);
    CHECK(!vc.smooth);
    CHECK(vc.case_id == 3);
    CHECK(vc.k0 == k);
  }
}

TEST_CASE("smooth witnesses produce dense hypersurface points") {
  double tol = 1e-7;
  NovikovNum y1 = NovikovNum::monomial(1.0, 0.3, 500.0);
  NovikovNum y2 = NovikovNum::monomial(2.0, 4.0, 500.0);
  std::vector<double> w = sorted_psi(0.0, P(), 1e-8);
  for (SurfacePoint p : {j_embed({0.4, 1.5}, P(), 1e-8),
                         gamma_vec(0.0, 0.5 * (w[0] + w[1]), P(), 1e-8),
                         gamma_vec(0.0, w[2] + 1.0, P(), 1e-8)}) {
    SmoothnessVerdict v = classify_point(p, P(), tol);
    REQUIRE(v.witness);
    NovToricPoint pt = v.witness(y1, y2);
    CHECK(pt.orbit_of() == "dense");
  }
}

TEST_CASE("degenerate closed form agrees with F bit-for-bit") {
  double lambda = 2.0;
  ParamSet Pc({cplx(lambda, 0), cplx(0, lambda), cplx(-lambda, 0)});
  int n = Pc.n();
  double tol = 1e-8;

  std::vector<ExtReal> vx(n + 2, ExtReal(0.0));
  vx[1] = ExtReal(1.2);
  vx[3] = ExtReal(-1.2);
  TropToricPoint p(vx, 0.0);
  SurfacePoint a = F_eval(p, Pc, tol);
  SurfacePoint b = degenerate_F_reduced(p, lambda, Pc, tol);
  REQUIRE(a.coords.size() == b.coords.size());
  for (size_t i = 0; i < a.coords.size(); ++i) CHECK(a.coords[i] == b.coords[i]);

  CHECK_THROWS(degenerate_F_reduced(p, lambda, P(), tol));  // norms not collided
}

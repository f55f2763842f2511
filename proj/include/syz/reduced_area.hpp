#pragma once

#include <cstdint>

#include "syz/params.hpp"
#include "syz/quadrature.hpp"

namespace syz {

// density of omega_{red,s} against the Lebesgue measure |dz dz-bar| of C:
// (1/2) ( |h'(z)|^2 / (2 sqrt(|h(z)|^2 + s^2)) + 1 )
double reduced_density(cplx z, double s, const ParamSet& P);

// psi(s, r) = (1/2pi) * integral of the reduced density over {|z| <= r}
//           = (1/pi) * integral of reduced_density dx dy.
// Adaptive polar quadrature, annuli split at each enclosed |a_k| and angular
// breaks at arg(a_k); relative error <= tol.  Results are memoized by exact
// (ParamSet, s, r, tol) key so repeated evaluations (bisections, walls) are
// self-consistent to the bit.
double psi(double s, double r, const ParamSet& P, double tol = 1e-8);

// same integral through the serial reference integrator (testing/benchmark)
double psi_serial(double s, double r, const ParamSet& P, double tol = 1e-8);

// uncached run reporting the error estimate and cell count
QuadResult psi_quad(double s, double r, const ParamSet& P, double tol = 1e-8,
                    bool parallel = true);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Monte-Carlo oracle: mixture sampling (uniform on the disk, plus 1/|z - a_k|
// importance components in small balls around enclosed roots when |s| is
// small).  Deterministic for a fixed seed regardless of thread count.
McEstimate psi_oracle_mc(double s, double r, const ParamSet& P,
                         std::int64_t samples, std::uint64_t seed = 0);

// unique r with psi(s, r) = c (monotone bisection on a dyadic r-grid; stops on
// the psi-value residual <= tol)
double psi_inverse_r(double s, double c, const ParamSet& P, double tol = 1e-9);

// wall values psi_j(s) = psi(s, |a_j|) for j = 0..n (memoized like psi)
std::vector<double> psi_wall_values(double s, const ParamSet& P, double tol = 1e-8);

void psi_cache_clear();

}  // namespace syz

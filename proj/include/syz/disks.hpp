#pragma once

#include <array>
#include <functional>
#include <set>
#include <string>

#include "syz/params.hpp"
#include "syz/reduced_area.hpp"

namespace syz {

BasePoint pi_map(cplx u, cplx v, cplx z);

// Closed-form parameterization zeta -> (u, v, z) of a holomorphic (or, for
// the s < 0 orbit disk, anti-holomorphic) disk, with both Wirtinger
// derivatives so signed pullback areas come out right.
struct DiskMap {
  std::string kind;
  std::function<std::array<cplx, 3>(cplx)> value;
  std::function<std::array<cplx, 3>(cplx)> d_holo;  // d/d zeta
  std::function<std::array<cplx, 3>(cplx)> d_anti;  // d/d zeta-bar
};

// Blaschke-product disk beta_{k,I} at q_k = (0, r_k): the Blaschke factors of
// the roots in I go to u, the rest of [k] to v, and both carry the continuous
// square-root branch g_k of the nonvanishing radicand.
DiskMap disk_beta(int k, const std::set<int>& I, const ParamSet& P);

// orbit disk delta_k at wall height s (anti-holomorphic for s < 0)
DiskMap disk_delta(int k, double s, const ParamSet& P);

// (1/2pi) * signed pullback area of the standard Kaehler form of C^3
double disk_area(const DiskMap& d, double tol = 1e-8);
double disk_area_serial(const DiskMap& d, double tol = 1e-8);

// radius interval {0} x [min |z|, max |z|] swept by a polyline in C with
// endpoints among the roots
struct RadiusInterval {
  double lo, hi;
};
RadiusInterval lagrangian_sphere_image(const std::vector<cplx>& polyline,
                                       const ParamSet& P);

// rotate a_{k-1}, a_k about their midpoint by angle pi*t
ParamSet half_twist_path(const ParamSet& P, int k, double t);

// norms |a_j(t)| (the singular-locus track at height s = 0)
std::vector<double> singular_locus_radii(const ParamSet& P);

// the moment 0 < t0 < 1 where |a_{k-1}(t)| = |a_k(t)|, by bisection
double half_twist_collision_t0(const ParamSet& P, int k, double tol = 1e-6);

}  // namespace syz

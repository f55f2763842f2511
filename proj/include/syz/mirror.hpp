#pragma once

#include "syz/novikov.hpp"
#include "syz/params.hpp"
#include "syz/toric.hpp"

namespace syz {

// r-interval membership for the chart region U_l (wall circles admissible
// off the s = 0 axis)
bool in_chart_region(int l, const BasePoint& q, const ParamSet& P);

// fiber coordinates of the corrected mirror chart T_k over q = (s, r):
// val(y1) = s, val(y2) = psi(s, r) - k min{0, s}
struct MirrorPoint {
  int n = 1;  // ambient resolution size (charts run 0..n+1)
  int chart = 0;
  NovikovNum y1, y2;
  BasePoint base;
};

MirrorPoint fiber_point(const BasePoint& q, int k, const NovikovNum& unit1,
                        const NovikovNum& unit2, const ParamSet& P,
                        double tol = 1e-8);

// W_k = y2 (1 + y1)^k
NovikovNum W_local(int k, const NovikovNum& y1, const NovikovNum& y2);

// Phi_{k,k+1}: (y1, y2) -> (y1, y2 (1 + y1)); backward uses inv(1 + y1);
// defined off the wall val(y1) = 0
std::pair<NovikovNum, NovikovNum> phi_transition(bool forward, const NovikovNum& y1,
                                                 const NovikovNum& y2);

// semi-global embedding into the resolution; charts 1..n admit two chart
// placements whose agreement through the toric gluing is asserted
NovToricPoint g_embed(const MirrorPoint& m);

// invariants (prod x_j^j, y) separating points of the dense torus modulo G
std::pair<NovikovNum, NovikovNum> torus_invariants(const NovToricPoint& p);

// recover (s, r) from the valuations
BasePoint pi0_dual(const MirrorPoint& m, const ParamSet& P, double tol = 1e-9);

}  // namespace syz

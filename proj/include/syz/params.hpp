#pragma once

#include <complex>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace syz {

using cplx = std::complex<double>;

// (s, r) on the base B = R x R_+
struct BasePoint {
  double s = 0.0;
  double r = 1.0;
};

// Roots a_0..a_n of the monic polynomial h(z) = prod (z - a_k), plus the
// representative radii r_0..r_{n+1} interlacing the distinct root norms.
class ParamSet {
 public:
  ParamSet(std::vector<cplx> a, std::vector<double> radii);

  // radii auto-chosen to interlace the distinct norms
  explicit ParamSet(std::vector<cplx> a);

  int n() const { return int(a_.size()) - 1; }
  const std::vector<cplx>& roots() const { return a_; }
  const std::vector<double>& radii() const { return radii_; }
  double root_norm(int k) const { return norms_[k]; }
  const std::vector<double>& root_norms() const { return norms_; }

  cplx h(cplx z) const;
  cplx h_prime(cplx z) const;

  bool norms_pairwise_distinct() const;

  // distinct norm values, increasing
  std::vector<double> distinct_norms(double tol = 0.0) const;

  nlohmann::json to_json() const;
  static ParamSet from_json(const nlohmann::json& j);

  // n = 2, a = (1, 2i, -3), radii (0.5, 1.5, 2.5, 4.0)
  static ParamSet reference_a2();

 private:
  std::vector<cplx> a_;
  std::vector<double> norms_;
  std::vector<double> radii_;

  void validate() const;
};

}  // namespace syz

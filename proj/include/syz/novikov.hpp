#pragma once

#include <complex>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "syz/extreal.hpp"

namespace syz {

using cplx = std::complex<double>;

// Truncated formal sum  sum_i a_i T^{lambda_i}  with complex coefficients and
// strictly increasing real exponents below a cutoff.  Exponents generated at
// desk scale come from a small closed set of sums of config reals, so exponent
// comparison is exact floating comparison.
class NovikovNum {
 public:
  struct Term {
    double exp;
    cplx coeff;
  };

  static constexpr double kDefaultCutoff = 50.0;
  static constexpr double kCoeffZeroTol = 1e-12;
  // exponents arising from the same sum of config reals can differ by the
  // floating association order; anything this close is the same exponent
  static constexpr double kExpMergeTol = 1e-9;

  NovikovNum() : cutoff_(kDefaultCutoff) {}  // empty sum (zero)
  explicit NovikovNum(double cutoff) : cutoff_(cutoff) {}

  // constant c (dropped if |c| below the zero tolerance)
  static NovikovNum constant(cplx c, double cutoff = kDefaultCutoff);
  // c * T^e
  static NovikovNum monomial(cplx c, double e, double cutoff = kDefaultCutoff);
  // from a term list (merged, cleaned, truncated)
  static NovikovNum from_terms(std::vector<Term> terms, double cutoff = kDefaultCutoff);

  bool is_empty() const { return terms_.empty(); }
  double cutoff() const { return cutoff_; }
  const std::vector<Term>& terms() const { return terms_; }

  // leading exponent; empty sum gives +inf flagged below-precision
  ExtReal val() const;
  cplx leading_coeff() const;

  NovikovNum add(const NovikovNum& o) const;
  NovikovNum sub(const NovikovNum& o) const;
  NovikovNum mul(const NovikovNum& o) const;
  NovikovNum neg() const;
  NovikovNum scale(cplx c) const;
  // multiply by c*T^e (exact exponent shift, cutoff shifts too so the
  // represented precision window is preserved)
  NovikovNum shift(cplx c, double e) const;
  NovikovNum pow_int(long long m) const;
  // Newton iteration on the leading-term factorization
  NovikovNum inv() const;

  // equality modulo terms with exponent >= min cutoff, coefficients within tol
  bool equals(const NovikovNum& o, double tol = kCoeffZeroTol) const;

  nlohmann::json to_json() const;
  static NovikovNum from_json(const nlohmann::json& j);

 private:
  std::vector<Term> terms_;  // strictly increasing exponents, nonzero coeffs
  double cutoff_;

  void normalize();  // sort+merge+drop zeros+truncate
};

inline NovikovNum operator+(const NovikovNum& a, const NovikovNum& b) { return a.add(b); }
inline NovikovNum operator-(const NovikovNum& a, const NovikovNum& b) { return a.sub(b); }
inline NovikovNum operator*(const NovikovNum& a, const NovikovNum& b) { return a.mul(b); }

ExtReal val(const NovikovNum& x);
NovikovNum add(const NovikovNum& x, const NovikovNum& y);
NovikovNum mul(const NovikovNum& x, const NovikovNum& y);
NovikovNum pow_int(const NovikovNum& x, long long m);
NovikovNum inv(const NovikovNum& x);

}  // namespace syz

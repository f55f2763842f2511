#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace syz {

// Real number extended with +inf / -inf.  Valuations of nonzero elements are
// finite; the valuation of a (truncated) zero is +inf carrying a
// "below precision" flag so callers can tell an exact zero apart from a
// truncation artifact.
struct ExtReal {
  enum class Kind { Finite, PosInf, NegInf };

  Kind kind = Kind::Finite;
  double value = 0.0;
  bool below_precision = false;  // only meaningful together with PosInf

  ExtReal() = default;
  ExtReal(double v) : kind(Kind::Finite), value(v) {}

  static ExtReal pos_inf(bool below_prec = false) {
    ExtReal e;
    e.kind = Kind::PosInf;
    e.below_precision = below_prec;
    return e;
  }
  static ExtReal neg_inf() {
    ExtReal e;
    e.kind = Kind::NegInf;
    return e;
  }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_pos_inf() const { return kind == Kind::PosInf; }
  bool is_neg_inf() const { return kind == Kind::NegInf; }

  double finite() const {
    if (!is_finite()) throw std::domain_error("ExtReal: not finite");
    return value;
  }

  // total order, -inf < finite < +inf
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    auto rank = [](const ExtReal& e) {
      return e.is_neg_inf() ? -1 : (e.is_pos_inf() ? 1 : 0);
    };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 0) return a.value < b.value;
    return false;
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }
  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind == b.kind && (!a.is_finite() || a.value == b.value);
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

  // +inf + finite = +inf, etc.; +inf + -inf is an error.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) return ExtReal(a.value + b.value);
    if (a.is_pos_inf() && b.is_neg_inf()) throw std::domain_error("ExtReal: inf - inf");
    if (a.is_neg_inf() && b.is_pos_inf()) throw std::domain_error("ExtReal: inf - inf");
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return neg_inf();
  }

  friend ExtReal operator-(const ExtReal& a) {
    if (a.is_pos_inf()) return neg_inf();
    if (a.is_neg_inf()) return pos_inf();
    return ExtReal(-a.value);
  }

  // integer scalar multiple with the 0 * inf = 0 convention used by the
  // weighted valuation sums (a vanishing coordinate whose weight is 0
  // contributes nothing).
  friend ExtReal operator*(long long m, const ExtReal& a) {
    if (m == 0) return ExtReal(0.0);
    if (a.is_finite()) return ExtReal(double(m) * a.value);
    bool pos = a.is_pos_inf() == (m > 0);
    return pos ? pos_inf() : neg_inf();
  }

  std::string str() const {
    if (is_pos_inf()) return below_precision ? "+inf(below precision)" : "+inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(value);
  }
};

inline ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }
inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

}  // namespace syz

#include "syz/novikov.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace syz {

NovikovNum NovikovNum::constant(cplx c, double cutoff) {
  return monomial(c, 0.0, cutoff);
}

NovikovNum NovikovNum::monomial(cplx c, double e, double cutoff) {
  NovikovNum x(cutoff);
  if (std::abs(c) > kCoeffZeroTol && e < cutoff) x.terms_.push_back({e, c});
  return x;
}

NovikovNum NovikovNum::from_terms(std::vector<Term> terms, double cutoff) {
  NovikovNum x(cutoff);
  x.terms_ = std::move(terms);
  x.normalize();
  return x;
}

void NovikovNum::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (t.exp >= cutoff_) continue;
    if (!out.empty() && t.exp - out.back().exp <= kExpMergeTol) {
      out.back().coeff += t.coeff;
      if (std::abs(out.back().coeff) <= kCoeffZeroTol) out.pop_back();
    } else if (std::abs(t.coeff) > kCoeffZeroTol) {
      out.push_back(t);
    }
  }
  terms_ = std::move(out);
}

ExtReal NovikovNum::val() const {
  if (terms_.empty()) return ExtReal::pos_inf(/*below_prec=*/true);
  return ExtReal(terms_.front().exp);
}

cplx NovikovNum::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of empty sum");
  return terms_.front().coeff;
}

NovikovNum NovikovNum::add(const NovikovNum& o) const {
  NovikovNum r(std::min(cutoff_, o.cutoff_));
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

NovikovNum NovikovNum::sub(const NovikovNum& o) const { return add(o.neg()); }

NovikovNum NovikovNum::neg() const {
  NovikovNum r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

NovikovNum NovikovNum::scale(cplx c) const {
  NovikovNum r(cutoff_);
  if (std::abs(c) <= kCoeffZeroTol) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff *= c;
  r.normalize();
  return r;
}

NovikovNum NovikovNum::shift(cplx c, double e) const {
  // window of knowledge shifts along with the exponents
  NovikovNum r(cutoff_ + e);
  if (std::abs(c) <= kCoeffZeroTol) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) {
    t.exp += e;
    t.coeff *= c;
  }
  r.normalize();
  return r;
}

NovikovNum NovikovNum::mul(const NovikovNum& o) const {
  // x known mod T^{c1}, y known mod T^{c2}: missing cross terms sit at
  // exponents >= min(c1 + val(y), c2 + val(x)).
  double rc;
  if (terms_.empty() || o.terms_.empty()) {
    rc = std::min(cutoff_, o.cutoff_);
    return NovikovNum(rc);
  }
  rc = std::min(cutoff_ + o.terms_.front().exp, o.cutoff_ + terms_.front().exp);
  NovikovNum r(rc);
  r.terms_.reserve(std::min(terms_.size() * o.terms_.size(), std::size_t(1) << 14));
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) {
      double e = a.exp + b.exp;
      if (e >= rc) continue;
      cplx c = a.coeff * b.coeff;
      // below-tolerance products would be dropped by normalize anyway; skip
      // them here so long products stay near-linear in the surviving terms
      if (std::abs(c) <= kCoeffZeroTol) continue;
      r.terms_.push_back({e, c});
    }
  r.normalize();
  return r;
}

NovikovNum NovikovNum::pow_int(long long m) const {
  if (m < 0) return inv().pow_int(-m);
  NovikovNum acc = NovikovNum::constant(1.0, cutoff_ + 0.0);
  // keep the window of the base so powers of exact monomials stay exact
  NovikovNum base = *this;
  long long e = m;
  while (e > 0) {
    if (e & 1) acc = acc.mul(base);
    base = (e > 1) ? base.mul(base) : base;
    e >>= 1;
  }
  return acc;
}

NovikovNum NovikovNum::inv() const {
  if (terms_.empty()) throw std::domain_error("inv: non-unit (empty sum)");
  double e0 = terms_.front().exp;
  cplx a0 = terms_.front().coeff;
  // x = a0 T^{e0} (1 + u), val(u) > 0.  Newton iteration b <- b (2 - (1+u) b)
  // doubles the valuation precision each step and, unlike the raw geometric
  // series, never passes through large alternating partial sums.
  double window = cutoff_ - e0;
  NovikovNum a = shift(1.0 / a0, -e0);  // 1 + u, window cutoff - e0
  NovikovNum b = NovikovNum::constant(1.0, window);
  if (a.terms_.size() > 1) {
    double vu = a.terms_[1].exp;
    NovikovNum two = NovikovNum::constant(2.0, window);
    for (double prec = vu; prec < window; prec *= 2.0) {
      b = b.mul(two.sub(a.mul(b)));
      // the step is only accurate below T^{2 prec}; clip the rest or it
      // feeds back squared next round and swamps the small coefficients
      double keep = std::min(window, 2.0 * prec);
      std::vector<Term> kept;
      for (const Term& t : b.terms_)
        if (t.exp < keep) kept.push_back(t);
      b = from_terms(std::move(kept), window);
    }
  }
  return b.shift(1.0 / a0, -e0);  // final window cutoff - 2 e0
}

bool NovikovNum::equals(const NovikovNum& o, double tol) const {
  double c = std::min(cutoff_, o.cutoff_);
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    bool ia = i < terms_.size() && terms_[i].exp < c;
    bool jb = j < o.terms_.size() && o.terms_[j].exp < c;
    if (!ia && !jb) return true;
    if (ia && jb && std::abs(terms_[i].exp - o.terms_[j].exp) <= kExpMergeTol) {
      if (std::abs(terms_[i].coeff - o.terms_[j].coeff) > tol) return false;
      ++i, ++j;
    } else if (ia && (!jb || terms_[i].exp < o.terms_[j].exp)) {
      if (std::abs(terms_[i].coeff) > tol) return false;
      ++i;
    } else {
      if (std::abs(o.terms_[j].coeff) > tol) return false;
      ++j;
    }
  }
  return true;
}

nlohmann::json NovikovNum::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : terms_)
    terms.push_back({{"exp", t.exp}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
  return {{"terms", terms}, {"cutoff", cutoff_}};
}

NovikovNum NovikovNum::from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({t.at("exp").get<double>(),
                     cplx(t.at("re").get<double>(), t.at("im").get<double>())});
  return from_terms(std::move(terms), j.at("cutoff").get<double>());
}

ExtReal val(const NovikovNum& x) { return x.val(); }
NovikovNum add(const NovikovNum& x, const NovikovNum& y) { return x.add(y); }
NovikovNum mul(const NovikovNum& x, const NovikovNum& y) { return x.mul(y); }
NovikovNum pow_int(const NovikovNum& x, long long m) { return x.pow_int(m); }
NovikovNum inv(const NovikovNum& x) { return x.inv(); }

}  // namespace syz

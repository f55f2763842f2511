#include "syz/toric.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace syz {

TropToricPoint::TropToricPoint(std::vector<ExtReal> vx_, double vy_, double check_tol)
    : vx(std::move(vx_)), vy(vy_) {
  if (vx.size() < 3) throw std::invalid_argument("TropToricPoint: need n+2 >= 3 slots");
  std::vector<int> inf = infinite_indices();
  if (inf.size() > 2)
    throw std::invalid_argument("TropToricPoint: more than two vanishing coordinates");
  if (inf.size() == 2 && inf[1] != inf[0] + 1)
    throw std::invalid_argument("TropToricPoint: non-adjacent vanishing coordinates");
  for (const ExtReal& v : vx)
    if (v.is_neg_inf())
      throw std::invalid_argument("TropToricPoint: -inf coordinate valuation");
  if (!inf.empty()) {
    if (vy != 0.0)
      throw std::invalid_argument("TropToricPoint: vanishing coordinate needs val(y) = 0");
  } else {
    double sum = 0.0;
    for (const ExtReal& v : vx) sum += v.finite();
    if (vy != 0.0) {
      if (std::abs(sum - std::min(0.0, vy)) > check_tol)
        throw std::invalid_argument("TropToricPoint: sum vx != min{0, vy}");
    } else if (sum < -check_tol) {
      throw std::invalid_argument("TropToricPoint: val(1+y) must be >= 0 at vy = 0");
    }
  }
}

std::vector<int> TropToricPoint::infinite_indices() const {
  std::vector<int> out;
  for (int j = 0; j < int(vx.size()); ++j)
    if (vx[j].is_pos_inf()) out.push_back(j);
  return out;
}

NovToricPoint::NovToricPoint(std::vector<HomogCoord> x, NovikovNum y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() < 3) throw std::invalid_argument("NovToricPoint: need n+2 coordinates");
  if (y_.is_empty()) throw std::invalid_argument("NovToricPoint: y must be nonzero");
  std::vector<int> zeros;
  for (int j = 0; j < int(x_.size()); ++j) {
    if (x_[j].is_zero) {
      if (!x_[j].num.is_empty())
        throw std::invalid_argument("NovToricPoint: zero flag on nonempty sum");
      zeros.push_back(j);
    } else if (x_[j].num.is_empty()) {
      throw std::invalid_argument(
          "NovToricPoint: below-precision coordinate without is_zero");
    }
  }
  for (size_t i = 0; i + 1 < zeros.size(); ++i)
    if (zeros[i + 1] - zeros[i] >= 2 || zeros.size() > 2)
      throw std::invalid_argument("NovToricPoint: in the irrelevant locus");
  if (zeros.size() > 2)
    throw std::invalid_argument("NovToricPoint: in the irrelevant locus");

  if (zeros.empty()) {
    NovikovNum prod = NovikovNum::constant(1.0, x_[0].num.cutoff());
    for (const HomogCoord& c : x_) prod = prod.mul(c.num);
    NovikovNum onepy = NovikovNum::constant(1.0, y_.cutoff()).add(y_);
    if (!prod.equals(onepy, 1e-9))
      throw std::invalid_argument("NovToricPoint: prod x_j != 1 + y");
  } else {
    // prod x = 0 forces y = -1 exactly
    if (!y_.equals(NovikovNum::constant(-1.0, y_.cutoff()), 1e-12))
      throw std::invalid_argument("NovToricPoint: vanishing coordinate needs y = -1");
  }
}

std::vector<int> NovToricPoint::divisor_membership() const {
  std::vector<int> out;
  for (int j = 0; j < int(x_.size()); ++j)
    if (x_[j].is_zero) out.push_back(j);
  return out;
}

std::string NovToricPoint::orbit_of() const {
  std::vector<int> z = divisor_membership();
  if (z.empty()) return "dense";
  if (z.size() == 1) return "O(v_" + std::to_string(z[0]) + ")";
  return "O(sigma_" + std::to_string(z[0]) + ")";
}

TropToricPoint NovToricPoint::val_point() const {
  std::vector<ExtReal> vx;
  vx.reserve(x_.size());
  for (const HomogCoord& c : x_)
    vx.push_back(c.is_zero ? ExtReal::pos_inf() : c.num.val());
  return TropToricPoint(std::move(vx), y_.val().finite());
}

nlohmann::json NovToricPoint::to_json() const {
  nlohmann::json xs = nlohmann::json::array();
  for (const HomogCoord& c : x_)
    xs.push_back(c.is_zero ? nlohmann::json("zero") : c.num.to_json());
  return {{"x", xs}, {"y", y_.to_json()}};
}

std::vector<NovikovNum> g_element(std::vector<NovikovNum> t) {
  if (t.size() < 3) throw std::invalid_argument("g_element: need n+2 entries");
  NovikovNum p0 = NovikovNum::constant(1.0, t[0].cutoff());
  NovikovNum p1 = p0;
  for (int k = 0; k < int(t.size()); ++k) {
    if (t[k].is_empty()) throw std::invalid_argument("g_element: zero entry");
    p0 = p0.mul(t[k]);
    p1 = p1.mul(t[k].pow_int(k));
  }
  NovikovNum one = NovikovNum::constant(1.0, p0.cutoff());
  if (!p0.equals(one, 1e-9) || !p1.equals(NovikovNum::constant(1.0, p1.cutoff()), 1e-9))
    throw std::invalid_argument("g_element: product constraints violated");
  return t;
}

std::vector<NovikovNum> g_pattern(int n, int center, const NovikovNum& t) {
  if (center < 1 || center > n)
    throw std::invalid_argument("g_pattern: center must be interior");
  std::vector<NovikovNum> g(n + 2, NovikovNum::constant(1.0, t.cutoff()));
  g[center - 1] = t.inv();
  g[center] = t.pow_int(2);
  g[center + 1] = t.inv();
  return g_element(std::move(g));
}

NovToricPoint g_act(const std::vector<NovikovNum>& t, const NovToricPoint& p) {
  if (int(t.size()) != p.n() + 2) throw std::invalid_argument("g_act: size mismatch");
  std::vector<HomogCoord> x = p.x();
  for (int j = 0; j < int(x.size()); ++j)
    if (!x[j].is_zero) x[j].num = x[j].num.mul(t[j]);
  return NovToricPoint(std::move(x), p.y());
}

std::pair<NovikovNum, NovikovNum> chart_coords(const NovToricPoint& p, int k) {
  int n = p.n();
  if (k < 0 || k > n) throw std::invalid_argument("chart_coords: cone index");
  for (int j = 0; j <= n + 1; ++j)
    if (j != k && j != k + 1 && p.x()[j].is_zero)
      throw std::domain_error("chart_coords: outside chart (vanishing coordinate)");

  auto power = [&](int j, int e) -> NovikovNum {
    const HomogCoord& c = p.x()[j];
    if (c.is_zero) {
      if (e > 0) return NovikovNum(c.num.cutoff());  // 0^positive = 0
      if (e == 0) return NovikovNum::constant(1.0, c.num.cutoff());
      throw std::domain_error("chart_coords: negative power of zero");
    }
    return c.num.pow_int(e);
  };
  NovikovNum z = NovikovNum::constant(1.0, p.y().cutoff());
  NovikovNum w = z;
  bool z_zero = false, w_zero = false;
  for (int j = 0; j <= n + 1; ++j) {
    if (p.x()[j].is_zero && k + 1 - j > 0) z_zero = true;
    if (p.x()[j].is_zero && j - k > 0) w_zero = true;
  }
  if (!z_zero)
    for (int j = 0; j <= n + 1; ++j) z = z.mul(power(j, k + 1 - j));
  else
    z = NovikovNum(p.y().cutoff());
  if (!w_zero)
    for (int j = 0; j <= n + 1; ++j) w = w.mul(power(j, j - k));
  else
    w = NovikovNum(p.y().cutoff());
  return {z, w};
}

NovToricPoint chart_to_homogeneous(int n, int k, const NovikovNum& z,
                                   const NovikovNum& w) {
  if (k < 0 || k > n) throw std::invalid_argument("chart_to_homogeneous: cone index");
  double cutoff = std::min(z.cutoff(), w.cutoff());
  std::vector<HomogCoord> x(n + 2, HomogCoord::of(NovikovNum::constant(1.0, 1e300)));
  x[k] = z.is_empty() ? HomogCoord::zero() : HomogCoord::of(z);
  x[k + 1] = w.is_empty() ? HomogCoord::zero() : HomogCoord::of(w);
  NovikovNum y = z.mul(w).sub(NovikovNum::constant(1.0, cutoff + 100.0));
  if (y.is_empty())
    throw std::invalid_argument("chart_to_homogeneous: z w = 1 gives y = 0");
  return NovToricPoint(std::move(x), std::move(y));
}

bool in_Y_domain(const TropToricPoint& p) {
  ExtReal sum(0.0);
  for (int j = 0; j < int(p.vx.size()); ++j) sum = sum + (long long)(j)*p.vx[j];
  return sum > ExtReal(0.0);
}

nlohmann::json trop_to_json(const TropToricPoint& p) {
  nlohmann::json vx = nlohmann::json::array();
  for (const ExtReal& v : p.vx)
    vx.push_back(v.is_pos_inf() ? nlohmann::json("inf") : nlohmann::json(v.finite()));
  return {{"vx", vx}, {"vy", p.vy}};
}

}  // namespace syz

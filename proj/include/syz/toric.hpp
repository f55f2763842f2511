#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "syz/extreal.hpp"
#include "syz/novikov.hpp"

namespace syz {

// rays v_k = (k, 1), 0 <= k <= n+1, with 2-cones sigma_k = <v_k, v_{k+1}>
struct FanData {
  int n;
  explicit FanData(int n_) : n(n_) {}
  std::pair<int, int> ray(int k) const { return {k, 1}; }
  int num_rays() const { return n + 2; }
  int num_cones() const { return n + 1; }
  // det(v_k, v_{k+1}); 1 for every cone (smooth fan)
  int cone_det(int k) const { return k - (k + 1); }
};

// homogeneous coordinate: either an exact zero or a nonzero Novikov element;
// an exact zero is distinct from a below-precision empty sum
struct HomogCoord {
  NovikovNum num;
  bool is_zero = false;

  static HomogCoord zero() { return {NovikovNum(), true}; }
  static HomogCoord of(NovikovNum v) { return {std::move(v), false}; }
};

struct TropToricPoint {
  std::vector<ExtReal> vx;  // val(x_0) .. val(x_{n+1}), +inf at exact zeros
  double vy = 0.0;          // val(y), finite since y != 0

  TropToricPoint() = default;
  TropToricPoint(std::vector<ExtReal> vx_, double vy_, double check_tol = 1e-9);

  int n() const { return int(vx.size()) - 2; }
  std::vector<int> infinite_indices() const;
};

class NovToricPoint {
 public:
  NovToricPoint(std::vector<HomogCoord> x, NovikovNum y);

  int n() const { return int(x_.size()) - 2; }
  const std::vector<HomogCoord>& x() const { return x_; }
  const NovikovNum& y() const { return y_; }

  std::vector<int> divisor_membership() const;  // indices with x_k = 0
  // "dense", "O(v_k)", or "O(sigma_k)"
  std::string orbit_of() const;

  TropToricPoint val_point() const;

  nlohmann::json to_json() const;

 private:
  std::vector<HomogCoord> x_;
  NovikovNum y_;
};

// element of G = {t : prod t_k = prod t_k^k = 1}, checked within truncation
std::vector<NovikovNum> g_element(std::vector<NovikovNum> t);
// the (1,...,1, t^-1, t^2, t^-1, 1,...,1) pattern centered at an interior index
std::vector<NovikovNum> g_pattern(int n, int center, const NovikovNum& t);
NovToricPoint g_act(const std::vector<NovikovNum>& t, const NovToricPoint& p);

// z_k = prod x_j^{k+1-j}, w_k = prod x_j^{j-k}; z_k w_k = 1 + y
std::pair<NovikovNum, NovikovNum> chart_coords(const NovToricPoint& p, int k);
NovToricPoint chart_to_homogeneous(int n, int k, const NovikovNum& z,
                                   const NovikovNum& w);

// sum_j j * vx_j > 0 (the analytic domain carved out by |prod x_j^j| < 1)
bool in_Y_domain(const TropToricPoint& p);

nlohmann::json trop_to_json(const TropToricPoint& p);

}  // namespace syz

#include "syz/params.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace syz {

ParamSet::ParamSet(std::vector<cplx> a, std::vector<double> radii)
    : a_(std::move(a)), radii_(std::move(radii)) {
  norms_.reserve(a_.size());
  for (cplx v : a_) norms_.push_back(std::abs(v));
  validate();
}

ParamSet::ParamSet(std::vector<cplx> a) : a_(std::move(a)) {
  norms_.reserve(a_.size());
  for (cplx v : a_) norms_.push_back(std::abs(v));
  // interlace the distinct norm values: one radius below the smallest, one
  // between each consecutive pair, one above the largest; for collided norms
  // this yields fewer than n+2 gaps, so pad the outer band.
  std::vector<double> d = distinct_norms();
  std::vector<double> r;
  r.push_back(0.5 * d.front());
  for (size_t i = 0; i + 1 < d.size(); ++i) r.push_back(0.5 * (d[i] + d[i + 1]));
  double top = d.back();
  while (r.size() < a_.size() + 1) {
    r.push_back(top * 1.5);
    top *= 1.5;
  }
  radii_ = std::move(r);
  validate();
}

void ParamSet::validate() const {
  if (a_.size() < 2) throw std::invalid_argument("ParamSet: need n >= 1");
  if (radii_.size() != a_.size() + 1)
    throw std::invalid_argument("ParamSet: need n+2 radii");
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == cplx(0.0, 0.0))
      throw std::invalid_argument("ParamSet: root at origin (h(0)=0)");
    for (size_t j = i + 1; j < a_.size(); ++j)
      if (a_[i] == a_[j]) throw std::invalid_argument("ParamSet: repeated root");
  }
  for (double r : radii_)
    if (!(r > 0)) throw std::invalid_argument("ParamSet: radius <= 0");
  // radii must interlace the distinct norm values
  std::vector<double> d = distinct_norms();
  if (norms_pairwise_distinct()) {
    // 0 < r_0 < |a_0| < r_1 < ... < |a_n| < r_{n+1} after sorting norms
    std::vector<double> sn = norms_;
    std::sort(sn.begin(), sn.end());
    for (size_t k = 0; k < sn.size(); ++k)
      if (!(radii_[k] < sn[k] && sn[k] < radii_[k + 1]))
        throw std::invalid_argument("ParamSet: radii fail interlacing");
  } else {
    for (double x : d) {
      bool separated = true;
      for (double r : radii_)
        if (r == x) separated = false;
      if (!separated) throw std::invalid_argument("ParamSet: radius on a root circle");
    }
  }
}

cplx ParamSet::h(cplx z) const {
  cplx p(1.0, 0.0);
  for (cplx ak : a_) p *= (z - ak);
  return p;
}

cplx ParamSet::h_prime(cplx z) const {
  // sum over i of prod_{j != i} (z - a_j)
  cplx s(0.0, 0.0);
  for (size_t i = 0; i < a_.size(); ++i) {
    cplx p(1.0, 0.0);
    for (size_t j = 0; j < a_.size(); ++j)
      if (j != i) p *= (z - a_[j]);
    s += p;
  }
  return s;
}

bool ParamSet::norms_pairwise_distinct() const {
  std::vector<double> sn = norms_;
  std::sort(sn.begin(), sn.end());
  return std::adjacent_find(sn.begin(), sn.end()) == sn.end();
}

std::vector<double> ParamSet::distinct_norms(double tol) const {
  std::vector<double> sn = norms_;
  std::sort(sn.begin(), sn.end());
  std::vector<double> out;
  for (double x : sn)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

nlohmann::json ParamSet::to_json() const {
  nlohmann::json roots = nlohmann::json::array();
  for (cplx v : a_) roots.push_back({{"re", v.real()}, {"im", v.imag()}});
  return {{"n", n()}, {"a", roots}, {"r", radii_}};
}

ParamSet ParamSet::from_json(const nlohmann::json& j) {
  std::vector<cplx> a;
  for (const auto& v : j.at("a"))
    a.emplace_back(v.at("re").get<double>(), v.at("im").get<double>());
  if (j.contains("r")) return ParamSet(std::move(a), j.at("r").get<std::vector<double>>());
  return ParamSet(std::move(a));
}

ParamSet ParamSet::reference_a2() {
  return ParamSet({cplx(1, 0), cplx(0, 2), cplx(-3, 0)}, {0.5, 1.5, 2.5, 4.0});
}

}  // namespace syz

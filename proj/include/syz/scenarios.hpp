#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "syz/params.hpp"

namespace syz {

struct RunConfig {
  std::optional<ParamSet> params;  // defaults to the A2 reference set
  double quad_tol = 1e-8;
  std::int64_t mc_samples = 400000;
  double novikov_cutoff = 500.0;
  double psi_match_tol = 1e-7;
  std::string scenario;
  std::uint64_t seed = 1;
  std::string out_dir = ".";

  const ParamSet& P() const;

  static RunConfig from_json(const nlohmann::json& j);
};

struct CheckRecord {
  std::string name;
  std::string anchor;  // identity of the verified statement (coverage manifest)
  std::string status;  // "pass" / "fail" / "info"
  double measured = 0.0;
  double tolerance = 0.0;
  double runtime_s = 0.0;
  std::string detail;
};

struct Report {
  std::string scenario;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

// executes the named suite and writes report.json plus scenario CSVs into
// cfg.out_dir; module errors become failed checks, not crashes
Report run_scenario(const RunConfig& cfg);

std::vector<std::string> scenario_names();

}  // namespace syz

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "syz/scenarios.hpp"

int main(int argc, char** argv) {
  CLI::App app{"SYZ fibration duality checks for the A_n surface singularity"};

  std::string scenario, config_path, out_dir = ".";
  std::uint64_t seed = 1;
  double tol = -1.0;
  app.add_option("scenario", scenario, "suite to run")
      ->required()
      ->check(CLI::IsMember(syz::scenario_names()));
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--tol", tol, "quadrature relative tolerance override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors exit 2 like every other failure
  }

  syz::RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "cannot open config: " << config_path << "\n";
        return 2;
      }
      nlohmann::json j;
      in >> j;
      cfg = syz::RunConfig::from_json(j);
    }
    cfg.scenario = scenario;
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--out")) cfg.out_dir = out_dir;
    if (tol > 0) cfg.quad_tol = tol;

    syz::Report rep = syz::run_scenario(cfg);
    for (const syz::CheckRecord& c : rep.checks)
      std::printf("[%s] %-34s measured %.3e  tol %.3e  (%.2fs)%s%s\n",
                  c.status == "pass"   ? "PASS"
                  : c.status == "info" ? "INFO"
                                       : "FAIL",
                  c.name.c_str(), c.measured, c.tolerance, c.runtime_s,
                  c.detail.empty() ? "" : "  -- ", c.detail.c_str());
    std::printf("%s: %s\n", scenario.c_str(), rep.all_pass() ? "all checks pass" : "FAILURES");
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

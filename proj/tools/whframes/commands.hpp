#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace whframes::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::optional<int> d;
  std::uint64_t seed = 0;
  std::optional<std::size_t> restarts;
  std::optional<double> tolerance;
  std::string format = "json";
  std::string output_path;

  std::string fiducial = "builtin:grassl6";
  bool exact = false;
  bool float_mode = false;
  bool zauner = false;
  bool with_conjugates = false;
  int k = 1;
  double a = 0.0;
  double b = 0.0;

  double tol() const { return tolerance.value_or(1e-10); }
};

int cmd_sic_verify(const RunConfig& cfg);
int cmd_sic_search(const RunConfig& cfg);
int cmd_sic_orbits(const RunConfig& cfg);
int cmd_mub_analyze(const RunConfig& cfg);
int cmd_mub_triple(const RunConfig& cfg);
int cmd_mub_dim4(const RunConfig& cfg);
int cmd_mub_solve(const RunConfig& cfg);

}  // namespace whframes::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bqc::cli {

enum class Format { Json, Csv };

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kConfigError = 2,
};

/// Raw command-line settings. Unset optionals take per-command defaults.
struct RunConfig {
  std::optional<int> n_outer;
  std::vector<double> g{1.0};
  std::optional<double> w;
  std::optional<int> n_max;
  std::optional<double> time;
  int k = 1;
  std::optional<double> tol;
  Format format = Format::Json;
  std::string out;  // empty = stdout

  double theta = 3.14159265358979323846;  // gates: phase of the parametrised members

  double t_min = 0.1;  // scan range
  double t_max = 13.0;
  int steps = 5000;
};

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_truth_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gates(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bqc::cli

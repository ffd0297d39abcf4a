#pragma once

#include "hydent/hydrogenic.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hydent::cli {

enum ExitCode { kOk = 0, kFailed = 1, kInvalid = 2, kNotConverged = 3 };

struct OutputRecord {
  QuantumState state;
  double radial = 0;
  double angular = 0;
  double total = 0;
  std::string method;
  double radial_err = 0;
  double angular_err = 0;
  std::optional<double> wall_time_ms;  // only with --timing, so default output is reproducible

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

/// Fixed CSV columns: D,Z,n,mu,radial,angular,total,method,radial_err,angular_err
/// then wall_time_ms when timing is on. Numbers use 15 significant digits and
/// mu is written as mu_1;mu_2;...
std::string csv_header(bool timing);
std::string csv_row(const OutputRecord& r, bool timing);

/// Entry point shared by the binary and the tests; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hydent::cli

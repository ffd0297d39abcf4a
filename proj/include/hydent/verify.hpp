#pragma once

#include "hydent/hydrogenic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hydent::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double worst = 0;       // largest observed deviation
  double tol = 0;         // the tolerance it was held to
  double seconds = 0;
  double time_limit = 0;  // seconds
  int checks = 0;
  std::vector<std::string> failures;  // at most a handful, for the report
};

struct VerifyOptions {
  /// Overrides the closed-vs-oracle tolerance of criteria 1 and 2.
  std::optional<double> tol;
  unsigned threads = 0;  // 0 = hardware concurrency
};

inline constexpr int kCriterionCount = 8;

/// Runs one acceptance criterion (1..8). Never throws for numeric failures;
/// they are reported as failed checks.
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

/// Criteria covered by a suite name: ground, lowlying, special, asymptotic, all.
/// Throws std::invalid_argument for an unknown name.
std::vector<int> suite_criteria(const std::string& suite);

/// One line: "PASS C<id> <title>: ...".
std::string format_line(const CriterionResult& r);

/// All valid chains mu_1 >= ... >= |mu_{D-1}| >= 0 with mu_1 <= max_l and mu_{D-1} >= 0.
std::vector<std::vector<int>> mu_chains(int D, int max_l);

}  // namespace hydent::verify

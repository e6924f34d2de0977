#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fraclap/quadrature.hpp"
#include "fraclap/record.hpp"

namespace fraclap::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kSolverFailure = 3,
  kVerifyFailure = 4,
};

/// Entry point shared by the executable and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads "key = value" lines (rel_tol, abs_tol, max_subdivisions); '#' starts a comment.
/// Throws DomainError on unknown keys or malformed values.
QuadratureSpec load_config(const std::string& path);

struct VerifyOptions {
  bool fine = false;
  std::uint64_t seed = 1;
  /// Scales every closed-form value by (1 + 1e-4) before comparing; the run must then fail.
  bool perturb = false;
  QuadratureSpec spec;
};

struct VerifySummary {
  double max_oracle_dev = 0.0;
  double max_lemma21_dev = 0.0;
  double max_moment_dev = 0.0;
  double max_asymmetry = 0.0;
  long long checks = 0;
  long long evaluations = 0;
  bool passed = true;
  std::string worst;  ///< description of the most offending check, relative to its tolerance
};

VerifySummary run_verify(const VerifyOptions& opt);

/// All table cells, three records per cell (lower, ritz, two_term) in table order.
/// Cells are computed on `jobs` worker threads; `failed` is set if any cell threw.
std::vector<OutputRecord> table_records(int n, unsigned jobs, bool& failed);

}  // namespace fraclap::cli

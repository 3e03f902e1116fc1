#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rhaudit/claim.hpp"
#include "rhaudit/laplace_reps.hpp"
#include "rhaudit/types.hpp"

namespace rhaudit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitHardFailure = 2;
inline constexpr int kExitClaimViolated = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitUsage = 64;

inline constexpr int kSchemaVersion = 1;

enum class Command { kVerify, kTraces, kRhfe, kGram, kCm, kLedger };
enum class Format { kJson, kCsv };

struct RunConfig {
  Command command = Command::kVerify;
  std::string suite = "all";
  std::string out;  // empty: standard output
  Format format = Format::kJson;
  std::uint64_t seed = 0;
  int digits = 80;
  std::optional<double> tol;  // overrides every hard-identity tolerance
  bool strictClaims = false;
  Complex s{0.75, -2.0};
  int n = 1;
  int nMax = 3;
  int L = 5;
  int jMax = 4000;
  int points = 6;
  int budget = 2000;
  laplace::CmGrid grid;
  int order = 3;
  double h = 1e-3;
  unsigned threads = 0;

  /// Throws DomainError on out-of-range fields.
  void validate() const;
};

/// A report together with its hard-identity verdict. Claims have no
/// tolerance and never fail hard.
struct Check {
  ClaimReport report;
  bool hard = false;
  double tolerance = 0.0;
  bool passed = true;
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite ("all" runs every suite in order).
std::vector<Check> run_suite(const std::string& suite, const RunConfig& config);

/// One report per audited claim in the manifest, at fixed inputs.
std::vector<Check> run_ledger(const RunConfig& config);

std::vector<Check> run_command(const RunConfig& config);

/// JSON array of versioned report objects.
std::string render_json(const std::vector<Check>& checks);
/// Header row plus one row per report; inputs are embedded as JSON text.
std::string render_csv(const std::vector<Check>& checks);

/// Exit code for a finished run.
int exit_code(const std::vector<Check>& checks, bool strictClaims);

/// Executes the configured command and writes the report to config.out or
/// to out. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flags, optional --config key=value file) and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rhaudit::cli

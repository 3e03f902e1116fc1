#pragma once

#include <chrono>
#include <string>
#include <variant>

#include "json.hpp"
#include "rhaudit/types.hpp"

namespace rhaudit {

enum class ClaimStatus { kConfirmed, kViolated, kInconclusive };

std::string to_string(ClaimStatus status);

using ClaimValue = std::variant<double, Complex>;

double magnitude(const ClaimValue& v);
ClaimValue difference(const ClaimValue& a, const ClaimValue& b);
nlohmann::json to_json(const ClaimValue& v);

/// Audit record for one identity or claim evaluated at one input.
struct ClaimReport {
  std::string claimId;
  nlohmann::json inputs = nlohmann::json::object();
  ClaimValue lhs = 0.0;
  ClaimValue rhs = 0.0;
  double absResidual = 0.0;
  double relResidual = 0.0;
  double errorEstimate = 0.0;
  ClaimStatus status = ClaimStatus::kInconclusive;
  double wallTimeMs = 0.0;

  bool confirmed() const { return status == ClaimStatus::kConfirmed; }
  bool violated() const { return status == ClaimStatus::kViolated; }
};

/// CONFIRMED when the residual is within the error estimate, VIOLATED when it
/// exceeds ten times the estimate, INCONCLUSIVE in between.
ClaimStatus classify(double absResidual, double errorEstimate);

/// Report for the claim lhs == rhs. The error estimate is floored at a few
/// ulps of the operands.
ClaimReport equality_report(std::string claimId, nlohmann::json inputs, ClaimValue lhs,
                            ClaimValue rhs, double errorEstimate);

/// Report for the claim lhs >= rhs (real operands). The residual is the
/// amount by which the inequality fails; CONFIRMED needs a margin larger
/// than the error estimate.
ClaimReport inequality_report(std::string claimId, nlohmann::json inputs, double lhs, double rhs,
                              double errorEstimate);

/// Finite-or-null JSON number, so reports stay valid JSON.
nlohmann::json json_number(double x);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace rhaudit

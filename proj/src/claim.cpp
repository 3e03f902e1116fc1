#include "rhaudit/claim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rhaudit {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kConfirmed: return "CONFIRMED";
    case ClaimStatus::kViolated: return "VIOLATED";
    case ClaimStatus::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

double magnitude(const ClaimValue& v) {
  return std::visit([](const auto& x) { return static_cast<double>(std::abs(x)); }, v);
}

ClaimValue difference(const ClaimValue& a, const ClaimValue& b) {
  if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b)) {
    return std::get<double>(a) - std::get<double>(b);
  }
  auto as_complex = [](const ClaimValue& v) {
    return std::visit([](const auto& x) { return Complex(x); }, v);
  };
  return as_complex(a) - as_complex(b);
}

nlohmann::json json_number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

nlohmann::json to_json(const ClaimValue& v) {
  if (const double* x = std::get_if<double>(&v)) return json_number(*x);
  const Complex z = std::get<Complex>(v);
  return nlohmann::json{{"re", json_number(z.real())}, {"im", json_number(z.imag())}};
}

ClaimStatus classify(double absResidual, double errorEstimate) {
  if (!std::isfinite(absResidual) || !std::isfinite(errorEstimate)) {
    return ClaimStatus::kInconclusive;
  }
  if (absResidual <= errorEstimate) return ClaimStatus::kConfirmed;
  if (absResidual > 10.0 * errorEstimate) return ClaimStatus::kViolated;
  return ClaimStatus::kInconclusive;
}

namespace {

double ulp_floor(double scale) {
  return 64.0 * std::numeric_limits<double>::epsilon() * scale +
         std::numeric_limits<double>::min();
}

}  // namespace

ClaimReport equality_report(std::string claimId, nlohmann::json inputs, ClaimValue lhs,
                            ClaimValue rhs, double errorEstimate) {
  ClaimReport r;
  r.claimId = std::move(claimId);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  const double scale = std::max(magnitude(lhs), magnitude(rhs));
  r.absResidual = magnitude(difference(lhs, rhs));
  r.relResidual = scale > 0.0 ? r.absResidual / scale : r.absResidual;
  r.errorEstimate = std::max(errorEstimate, ulp_floor(scale));
  r.status = classify(r.absResidual, r.errorEstimate);
  return r;
}

ClaimReport inequality_report(std::string claimId, nlohmann::json inputs, double lhs, double rhs,
                              double errorEstimate) {
  ClaimReport r;
  r.claimId = std::move(claimId);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.errorEstimate = std::max(errorEstimate, ulp_floor(scale));
  r.absResidual = std::max(0.0, rhs - lhs);
  r.relResidual = scale > 0.0 ? r.absResidual / scale : r.absResidual;
  const double margin = lhs - rhs;
  if (!std::isfinite(margin) || !std::isfinite(r.errorEstimate)) {
    r.status = ClaimStatus::kInconclusive;
  } else if (margin > r.errorEstimate) {
    r.status = ClaimStatus::kConfirmed;
  } else if (-margin > 10.0 * r.errorEstimate) {
    r.status = ClaimStatus::kViolated;
  } else {
    r.status = ClaimStatus::kInconclusive;
  }
  r.inputs["inequality"] = "lhs >= rhs";
  return r;
}

}  // namespace rhaudit

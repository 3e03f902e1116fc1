#include "rhaudit/amplitude.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rhaudit/errors.hpp"
#include "rhaudit/types.hpp"

namespace rhaudit::fresnel {

std::string to_string(AmplitudeFamily family) {
  switch (family) {
    case AmplitudeFamily::kExp: return "EXP";
    case AmplitudeFamily::kGauss: return "GAUSS";
    case AmplitudeFamily::kRational: return "RATIONAL";
    case AmplitudeFamily::kReciprocal: return "RECIPROCAL";
    case AmplitudeFamily::kInvSqrt: return "INV_SQRT";
  }
  return "?";
}

AmplitudeSpec::AmplitudeSpec(AmplitudeFamily family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {
  const std::size_t want = family_ == AmplitudeFamily::kReciprocal ? 0 : 1;
  if (params_.size() != want) {
    throw AmplitudeError(to_string(family_) + " expects " + std::to_string(want) +
                         " parameter(s)");
  }
}

AmplitudeSpec AmplitudeSpec::exp(double a) {
  if (!(a > 0.0)) throw DomainError("EXP amplitude needs a > 0");
  return {AmplitudeFamily::kExp, {a}};
}

AmplitudeSpec AmplitudeSpec::gauss(double a) {
  if (!(a > 0.0)) throw DomainError("GAUSS amplitude needs a > 0");
  return {AmplitudeFamily::kGauss, {a}};
}

AmplitudeSpec AmplitudeSpec::rational(double p) {
  if (!(p > 1.0)) throw DomainError("RATIONAL amplitude needs p > 1");
  return {AmplitudeFamily::kRational, {p}};
}

AmplitudeSpec AmplitudeSpec::reciprocal() { return {AmplitudeFamily::kReciprocal, {}}; }

AmplitudeSpec AmplitudeSpec::inv_sqrt(double scale) {
  if (!(scale > 0.0)) throw DomainError("INV_SQRT amplitude needs a positive scale");
  return {AmplitudeFamily::kInvSqrt, {scale}};
}

double AmplitudeSpec::operator()(double x) const {
  switch (family_) {
    case AmplitudeFamily::kExp: return std::exp(-params_[0] * x);
    case AmplitudeFamily::kGauss: return std::exp(-params_[0] * x * x);
    case AmplitudeFamily::kRational: return std::pow(1.0 + x, -params_[0]);
    case AmplitudeFamily::kReciprocal: return 1.0 / x;
    case AmplitudeFamily::kInvSqrt: return params_[0] / std::sqrt(x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double AmplitudeSpec::derivative(double x) const {
  switch (family_) {
    case AmplitudeFamily::kExp: return -params_[0] * std::exp(-params_[0] * x);
    case AmplitudeFamily::kGauss: return -2.0 * params_[0] * x * std::exp(-params_[0] * x * x);
    case AmplitudeFamily::kRational: return -params_[0] * std::pow(1.0 + x, -params_[0] - 1.0);
    case AmplitudeFamily::kReciprocal: return -1.0 / (x * x);
    case AmplitudeFamily::kInvSqrt: return -0.5 * params_[0] / (x * std::sqrt(x));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double AmplitudeSpec::log_value(double x) const {
  switch (family_) {
    case AmplitudeFamily::kExp: return -params_[0] * x;
    case AmplitudeFamily::kGauss: return -params_[0] * x * x;
    case AmplitudeFamily::kRational: return -params_[0] * std::log1p(x);
    case AmplitudeFamily::kReciprocal: return -std::log(x);
    case AmplitudeFamily::kInvSqrt: return std::log(params_[0]) - 0.5 * std::log(x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double AmplitudeSpec::integral() const {
  switch (family_) {
    case AmplitudeFamily::kExp: return 1.0 / params_[0];
    case AmplitudeFamily::kGauss: return 0.5 * std::sqrt(kPi / params_[0]);
    case AmplitudeFamily::kRational: return 1.0 / (params_[0] - 1.0);
    case AmplitudeFamily::kReciprocal:
    case AmplitudeFamily::kInvSqrt: return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double AmplitudeSpec::decay_scale() const {
  switch (family_) {
    case AmplitudeFamily::kExp: return 1.0 / params_[0];
    case AmplitudeFamily::kGauss: return 1.0 / std::sqrt(params_[0]);
    case AmplitudeFamily::kRational: return 1.0;
    case AmplitudeFamily::kReciprocal:
    case AmplitudeFamily::kInvSqrt: return std::numeric_limits<double>::infinity();
  }
  return 1.0;
}

bool AmplitudeSpec::is_pcid() const {
  return family_ == AmplitudeFamily::kExp || family_ == AmplitudeFamily::kGauss ||
         family_ == AmplitudeFamily::kRational;
}

bool AmplitudeSpec::singular_at_origin() const {
  return family_ == AmplitudeFamily::kReciprocal || family_ == AmplitudeFamily::kInvSqrt;
}

void AmplitudeSpec::validate() const {
  for (double p : params_) {
    if (!std::isfinite(p)) throw AmplitudeError(describe() + ": non-finite parameter");
  }
  // log A is compared instead of A so that fast-decaying families do not
  // underflow to zero on the grid.
  constexpr int kSamples = 400;
  double previous = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= kSamples; ++i) {
    const double x = 100.0 * i / kSamples;
    const double value = log_value(x);
    if (!std::isfinite(value)) {
      throw AmplitudeError(describe() + ": amplitude not positive at x = " + std::to_string(x));
    }
    if (!(value < previous)) {
      throw AmplitudeError(describe() + ": amplitude not decreasing at x = " + std::to_string(x));
    }
    previous = value;
  }
  if (family_ == AmplitudeFamily::kRational && !(params_[0] > 1.0)) {
    throw AmplitudeError(describe() + ": not integrable (needs p > 1)");
  }
}

std::string AmplitudeSpec::describe() const {
  std::ostringstream out;
  out << to_string(family_);
  if (!params_.empty()) out << "(" << params_[0] << ")";
  return out.str();
}

}  // namespace rhaudit::fresnel

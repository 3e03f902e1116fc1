#pragma once

#include <string>
#include <vector>

namespace rhaudit::fresnel {

enum class AmplitudeFamily {
  kExp,         // exp(-a x), a > 0
  kGauss,       // exp(-a x^2), a > 0
  kRational,    // (1 + x)^{-p}, p > 1
  kReciprocal,  // 1 / x; decreasing but not integrable
  kInvSqrt,     // c x^{-1/2}; decreasing, unbounded at 0, not integrable
};

std::string to_string(AmplitudeFamily family);

/// Descriptor of an oscillatory-integral amplitude A(x) on [0, inf), drawn from
/// a closed set of families so every property has a closed form to check.
class AmplitudeSpec {
 public:
  /// Unchecked construction; use validate() or the named factories.
  AmplitudeSpec(AmplitudeFamily family, std::vector<double> params);

  static AmplitudeSpec exp(double a);
  static AmplitudeSpec gauss(double a);
  static AmplitudeSpec rational(double p);
  static AmplitudeSpec reciprocal();
  static AmplitudeSpec inv_sqrt(double scale = 1.0);

  AmplitudeFamily family() const { return family_; }
  const std::vector<double>& params() const { return params_; }

  double operator()(double x) const;
  double derivative(double x) const;
  double log_value(double x) const;

  /// Closed-form integral over [0, inf); +inf for the non-integrable families.
  double integral() const;

  /// Length over which the amplitude decays by O(1); used to pre-split long
  /// oscillation lobes.
  double decay_scale() const;

  /// Positive, continuous, integrable and strictly decreasing.
  bool is_pcid() const;

  /// Singular at x = 0 (needs the endpoint substitution).
  bool singular_at_origin() const;

  /// Samples x in (0, 100]; throws AmplitudeError when A is not positive or
  /// not strictly decreasing there, or when the parameters are malformed.
  void validate() const;

  std::string describe() const;

 private:
  AmplitudeFamily family_;
  std::vector<double> params_;
};

}  // namespace rhaudit::fresnel

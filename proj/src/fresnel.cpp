#include "rhaudit/fresnel.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "rhaudit/errors.hpp"

namespace rhaudit::fresnel {

using quad::OscKind;
using quad::OscResult;
using quad::QuadSpec;

OscResult fresnel_sin_result(const AmplitudeSpec& a, double nu, const QuadSpec& spec) {
  return quad::integrate_oscillatory(a, nu, OscKind::kSin, spec);
}

double fresnel_sin(const AmplitudeSpec& a, double nu, const QuadSpec& spec) {
  return fresnel_sin_result(a, nu, spec).value;
}

OscResult fresnel_cos_result(const AmplitudeSpec& a, double nu, const QuadSpec& spec) {
  return quad::integrate_oscillatory(a, nu, OscKind::kCos, spec);
}

double fresnel_cos(const AmplitudeSpec& a, double nu, const QuadSpec& spec) {
  return fresnel_cos_result(a, nu, spec).value;
}

OscResult fresnel_sin_derivative(const AmplitudeSpec& a, double nu, const QuadSpec& spec) {
  a.validate();
  if (!a.is_pcid()) throw DomainError("derivative identity needs an integrable amplitude");
  const std::function<double(double)> da = [&a](double x) { return a.derivative(x); };
  quad::LobeOptions options;
  options.decayScale = a.decay_scale();
  return quad::integrate_lobes(da, nu, OscKind::kSin, spec, options);
}

OscResult fresnel_classic_result(double nu, const QuadSpec& spec) {
  return quad::integrate_oscillatory(AmplitudeSpec::inv_sqrt(0.5), nu, OscKind::kSin, spec);
}

double fresnel_classic(double nu, const QuadSpec& spec) {
  return fresnel_classic_result(nu, spec).value;
}

OscResult power_amplitude_value(double r, double nu, const QuadSpec& spec) {
  if (r == 1.0) return quad::integrate_oscillatory(AmplitudeSpec::reciprocal(), nu, OscKind::kSin, spec);
  if (r == 0.5) return quad::integrate_oscillatory(AmplitudeSpec::inv_sqrt(1.0), nu, OscKind::kCos, spec);
  throw DomainError("power amplitude supports r = 1 and r = 1/2 only");
}

ClaimReport derivative_identity_check(const AmplitudeSpec& a, double nu, const QuadSpec& spec) {
  Stopwatch clock;
  const OscResult fc = fresnel_cos_result(a, nu, spec);
  const OscResult fs = fresnel_sin_derivative(a, nu, spec);
  const double rhs = -fs.value / nu;
  nlohmann::json inputs{{"amplitude", a.describe()},
                        {"nu", nu},
                        {"cosConverged", fc.converged},
                        {"sinConverged", fs.converged}};
  ClaimReport r = equality_report("fresnel.derivative_identity", std::move(inputs), fc.value, rhs,
                                  fc.errorEstimate + fs.errorEstimate / nu);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

AmplitudeSpec draw_amplitude(std::mt19937_64& rng, std::optional<AmplitudeFamily> family) {
  AmplitudeFamily f;
  if (family) {
    f = *family;
  } else {
    std::uniform_int_distribution<int> pick(0, 2);
    const int k = pick(rng);
    f = k == 0 ? AmplitudeFamily::kExp : k == 1 ? AmplitudeFamily::kGauss : AmplitudeFamily::kRational;
  }
  switch (f) {
    case AmplitudeFamily::kExp: return AmplitudeSpec::exp(log_uniform(rng, 0.1, 10.0));
    case AmplitudeFamily::kGauss: return AmplitudeSpec::gauss(log_uniform(rng, 0.1, 10.0));
    case AmplitudeFamily::kRational: {
      std::uniform_real_distribution<double> p(1.2, 4.0);
      return AmplitudeSpec::rational(p(rng));
    }
    default: break;
  }
  throw DomainError("positivity audit samples integrable amplitude families only");
}

}  // namespace

ClaimReport lemma_positivity_audit(int samples, std::uint64_t seed,
                                   std::optional<AmplitudeFamily> family, const QuadSpec& spec) {
  if (samples < 1) throw DomainError("positivity audit needs at least one sample");
  Stopwatch clock;
  std::mt19937_64 rng(seed);
  double worstMargin = std::numeric_limits<double>::infinity();
  double worstValue = 0.0;
  double worstError = 0.0;
  nlohmann::json worst;
  int certified = 0;
  for (int i = 0; i < samples; ++i) {
    const AmplitudeSpec a = draw_amplitude(rng, family);
    const double nu = log_uniform(rng, 0.05, 50.0);
    const OscResult r = fresnel_sin_result(a, nu, spec);
    const double margin = r.value - r.errorEstimate;
    if (margin > 0.0 && r.converged) ++certified;
    if (margin < worstMargin) {
      worstMargin = margin;
      worstValue = r.value;
      worstError = r.errorEstimate;
      worst = {{"amplitude", a.describe()}, {"nu", nu}, {"converged", r.converged}};
    }
  }
  nlohmann::json inputs{{"samples", samples},
                        {"seed", seed},
                        {"family", family ? to_string(*family) : std::string("MIXED")},
                        {"certifiedPositive", certified},
                        {"worst", worst}};
  ClaimReport report = inequality_report("fresnel.lemma_positivity", std::move(inputs), worstValue,
                                         0.0, worstError);
  if (certified < samples && report.confirmed()) report.status = ClaimStatus::kInconclusive;
  report.wallTimeMs = clock.elapsed_ms();
  return report;
}

}  // namespace rhaudit::fresnel

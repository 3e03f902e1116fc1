#include "rhaudit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rhaudit/amplitude.hpp"
#include "rhaudit/errors.hpp"
#include "rhaudit/fresnel.hpp"
#include "rhaudit/manifest.hpp"
#include "rhaudit/rhfe.hpp"
#include "rhaudit/specfun.hpp"
#include "rhaudit/traces.hpp"

namespace rhaudit::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Check hard(ClaimReport report, double defaultTolerance, const RunConfig& config) {
  Check c;
  c.hard = true;
  c.tolerance = config.tol.value_or(defaultTolerance);
  c.passed = std::isfinite(report.absResidual) && report.absResidual <= c.tolerance;
  report.inputs["hardTolerance"] = c.tolerance;
  report.inputs["hardPassed"] = c.passed;
  c.report = std::move(report);
  return c;
}

Check claim(ClaimReport report) {
  Check c;
  c.report = std::move(report);
  return c;
}

template <typename F>
ClaimReport timed(F&& f) {
  Stopwatch clock;
  ClaimReport r = f();
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

traces::TraceParams trace_params(const RunConfig& config, Complex s) {
  traces::TraceParams p;
  p.s = s;
  p.nMax = config.nMax;
  p.LMax = config.L;
  p.jMax = config.jMax;
  p.digits = std::max(config.digits, traces::required_digits(std::max(config.nMax + 1, 1)));
  p.digits = std::min(p.digits, BigReal::kMaxDigits);
  return p;
}

void suite_race(const RunConfig& config, std::vector<Check>& out) {
  for (double re : {0.2, 0.35, 0.5, 0.65, 0.8}) {
    for (double im : {2.0, 6.5, 11.0, 15.5, 20.0}) {
      out.push_back(hard(rhfe::race_report({re, im}), 1e-8, config));
    }
  }
  out.push_back(hard(rhfe::race_report({2.0, 0.0}), 1e-8, config));

  const std::vector<Complex> points{{0.75, -2.0}, {0.6, 3.0}, {0.3, -5.0}, {0.5, 14.0}};
  for (Complex s : points) {
    out.push_back(hard(timed([&] {
                         const auto direct = rhfe::im_J_direct(s);
                         const auto j = rhfe::j_integral(s);
                         return equality_report("im_j.direct", {{"s", complex_json(s)}},
                                                direct.value, j.value.imag(),
                                                direct.errorEstimate + j.errorEstimate);
                       }),
                       1e-9, config));
  }
  constexpr int kTerms = 20;
  for (Complex s : points) {
    const double tail = 2.0 * rhfe::j_tail_bound(s.real(), 8, kTerms + 1);
    out.push_back(hard(timed([&] {
                         const auto direct = rhfe::im_J_direct(s);
                         double sum = 0.0;
                         double err = direct.errorEstimate + tail;
                         for (int n = 1; n <= kTerms; ++n) {
                           const auto jn = rhfe::im_J_n(n, s);
                           sum += 2.0 * jn.value;
                           err += 2.0 * jn.errorEstimate;
                         }
                         return equality_report("im_j.series",
                                                {{"s", complex_json(s)}, {"terms", kTerms}, {"tailBound", tail}},
                                                direct.value, sum, err);
                       }),
                       tail + 1e-10, config));
  }
}

void suite_reflection(const RunConfig& config, std::vector<Check>& out) {
  for (double re : {0.2, 0.4, 0.6, 0.8}) {
    for (double im : {-20.0, -5.0, 1.0, 5.0, 10.0, 20.0}) {
      const Complex s{re, im};
      out.push_back(hard(timed([&] {
                           const Complex a = specfun::zeta_star(s);
                           const Complex b = specfun::zeta_star(1.0 - s);
                           return equality_report("specfun.reflection", {{"s", complex_json(s)}}, a, b,
                                                  1e-13 * std::abs(a));
                         }),
                         1e-9, config));
    }
  }
  for (double t : {2.0, 5.0, 10.0, 14.0, 14.134725141734695, 21.0}) {
    const Complex s{0.5, t};
    out.push_back(hard(timed([&] {
                         const Complex z = specfun::zeta_star(s);
                         return equality_report("specfun.critical_real", {{"s", complex_json(s)}}, z.imag(),
                                                0.0, 1e-13 * std::abs(z));
                       }),
                       1e-9, config));
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> re(-5.0, 10.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (int k = 0; k < 20; ++k) {
    Complex z{re(rng), im(rng)};
    if (std::abs(z.imag()) < 0.1) z.imag(0.5);
    out.push_back(hard(timed([&] {
                         const Complex ratio = specfun::gamma(z + 1.0) / (z * specfun::gamma(z));
                         return equality_report("specfun.gamma_recurrence", {{"z", complex_json(z)}}, ratio,
                                                1.0, 1e-13);
                       }),
                       1e-12, config));
  }
}

void suite_laplace(const RunConfig& config, std::vector<Check>& out) {
  const std::vector<Complex> inverse{{2.0, 0.0},  {1.0, 1.0},   {0.25, 10.0}, {0.25, -3.0},
                                     {0.5, 0.5},  {1.0, -5.0},  {3.0, 4.0},   {0.3, 20.0},
                                     {0.75, -12.0}, {5.0, 0.0}};
  for (Complex z : inverse) out.push_back(hard(laplace::rep_inverse_z(z), 1e-8, config));
  const std::vector<Complex> green{{1.0, 0.0},  {3.0, 4.0},  {0.5, 2.0}, {2.0, 1.0},  {0.25, 1.0},
                                   {1.0, -3.0}, {0.75, 5.0}, {0.4, -0.4}, {2.0, -7.0}, {0.3, 6.0}};
  for (Complex z : green) out.push_back(hard(laplace::rep_green_complex(z), 1e-6, config));
  for (Complex z : {Complex{1.0, 0.0}, Complex{2.0, 1.0}, Complex{0.5, 3.0}}) {
    out.push_back(hard(laplace::rep_green_fresnel(z).direct, 1e-6, config));
  }
  for (auto [r, l] : {std::pair{2.0, 3}, std::pair{1.0, 1}, std::pair{5.0, 1}, std::pair{0.5, 4}}) {
    out.push_back(hard(laplace::bernstein_rep(r, l), 1e-10, config));
  }
  for (int j : {0, 1, 10, 50}) out.push_back(hard(laplace::moment_B2_report(j), 1e-10, config));
}

ClaimReport osc_report(const std::string& id, json inputs, const quad::OscResult& r, double exact) {
  inputs["lobes"] = r.lobes;
  inputs["accelerated"] = r.accelerated;
  inputs["converged"] = r.converged;
  return equality_report(id, std::move(inputs), r.value, exact, r.errorEstimate);
}

void suite_fresnel(const RunConfig& config, std::vector<Check>& out) {
  using fresnel::AmplitudeSpec;
  for (double a : {0.5, 1.0, 2.0}) {
    const AmplitudeSpec amp = AmplitudeSpec::exp(a);
    for (double nu : {0.5, 1.0, 2.0, 5.0}) {
      const double d = a * a + nu * nu;
      out.push_back(hard(timed([&] {
                           return osc_report("fresnel.closed_form",
                                             {{"amplitude", amp.describe()}, {"nu", nu}, {"kernel", "sin"}},
                                             fresnel::fresnel_sin_result(amp, nu), nu / d);
                         }),
                         1e-9, config));
      out.push_back(hard(timed([&] {
                           return osc_report("fresnel.closed_form",
                                             {{"amplitude", amp.describe()}, {"nu", nu}, {"kernel", "cos"}},
                                             fresnel::fresnel_cos_result(amp, nu), a / d);
                         }),
                         1e-9, config));
    }
  }
  for (double a : {0.5, 1.0}) {
    const AmplitudeSpec amp = AmplitudeSpec::gauss(a);
    for (double nu : {1.0, 3.0}) {
      out.push_back(hard(timed([&] {
                           return osc_report("fresnel.closed_form",
                                             {{"amplitude", amp.describe()}, {"nu", nu}, {"kernel", "cos"}},
                                             fresnel::fresnel_cos_result(amp, nu),
                                             0.5 * std::sqrt(kPi / a) * std::exp(-nu * nu / (4.0 * a)));
                         }),
                         1e-9, config));
    }
  }
  for (double nu : {0.5, 1.0, 2.0}) {
    out.push_back(hard(timed([&] {
                         return osc_report("fresnel.reciprocal", {{"nu", nu}},
                                           fresnel::power_amplitude_value(1.0, nu), kPi / 2.0);
                       }),
                       1e-6, config));
    out.push_back(hard(timed([&] {
                         return osc_report("fresnel.half_power", {{"nu", nu}},
                                           fresnel::power_amplitude_value(0.5, nu),
                                           std::sqrt(kPi / (2.0 * nu)));
                       }),
                       1e-6, config));
    out.push_back(hard(timed([&] {
                         return osc_report("fresnel.classic", {{"nu", nu}}, fresnel::fresnel_classic_result(nu),
                                           0.5 * std::sqrt(kPi / (2.0 * nu)));
                       }),
                       1e-6, config));
  }
  const std::vector<std::pair<AmplitudeSpec, double>> derivative{
      {AmplitudeSpec::exp(1.0), 0.5}, {AmplitudeSpec::exp(1.0), 1.0}, {AmplitudeSpec::exp(2.0), 2.0},
      {AmplitudeSpec::gauss(1.0), 1.0}, {AmplitudeSpec::rational(2.0), 2.0},
      {AmplitudeSpec::rational(3.0), 0.7}};
  for (const auto& [amp, nu] : derivative) {
    out.push_back(hard(fresnel::derivative_identity_check(amp, nu), 1e-7, config));
  }
  out.push_back(claim(fresnel::lemma_positivity_audit(200, config.seed)));
}

void suite_theta(const RunConfig& config, std::vector<Check>& out) {
  constexpr int kPoints = 20;
  for (int k = 0; k < kPoints; ++k) {
    const double x = 0.1 * std::pow(100.0, static_cast<double>(k) / (kPoints - 1));
    out.push_back(hard(timed([&] {
                         const double lhs = 2.0 * specfun::theta(1.0 / x) + 1.0;
                         const double rhs = std::sqrt(x) * (2.0 * specfun::theta(x) + 1.0);
                         return equality_report("theta.jacobi", {{"x", x}}, lhs, rhs, 0.0);
                       }),
                       1e-12, config));
  }
}

void suite_newton(const RunConfig& config, std::vector<Check>& out) {
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> wDist(-1.0, 1.0);
  std::uniform_real_distribution<double> vDist(0.2, 5.0);
  std::uniform_real_distribution<double> nDist(0.1, 3.0);
  std::bernoulli_distribution flip(0.5);
  quad::QuadSpec tight;
  tight.absTol = 1e-14;
  tight.relTol = 1e-13;
  for (int k = 0; k < 100; ++k) {
    const double w = wDist(rng);
    const double v = flip(rng) ? vDist(rng) : -vDist(rng);
    const double N = nDist(rng);
    out.push_back(hard(timed([&] {
                         auto f = [=](double r) { return std::exp(w * r) * std::sin(v * r); };
                         const auto q = quad::integrate_finite(f, 0.0, N, tight);
                         return equality_report("newton_leibnitz", {{"w", w}, {"v", v}, {"N", N}},
                                                rhfe::newton_leibnitz(w, v, N), q.value, q.errorEstimate);
                       }),
                       1e-9, config));
  }
  for (int L : {1, 2, 5}) {
    const double w = -0.5;
    const double v = 2.0;
    out.push_back(hard(timed([&] {
                         return equality_report("newton_leibnitz",
                                                {{"w", w}, {"v", v}, {"L", L}, {"periodic", true}},
                                                rhfe::newton_leibnitz_periodic(w, v, L),
                                                rhfe::newton_leibnitz(w, v, 2.0 * kPi * L / v), 0.0);
                       }),
                       1e-9, config));
  }
}

void suite_traces(const RunConfig& config, std::vector<Check>& out) {
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> jDist(0, 100);
  std::uniform_real_distribution<double> uDist(0.0, 1.0);
  std::uniform_real_distribution<double> vDist(-20.0, 20.0);
  for (int k = 0; k < 200; ++k) {
    const int j = jDist(rng);
    const double u = uDist(rng);
    double v = vDist(rng);
    if (std::abs(v) < 1e-3) v = 1.0;
    out.push_back(hard(traces::trace_decomposition_check(j, {u, v}), 1e-11, config));
  }
  const std::vector<Complex> bridgePoints{{0.75, -1.0}, {0.6, -2.0}, {0.3, 5.0}, {0.9, -4.0}};
  for (Complex s : bridgePoints) {
    for (int j = 0; j <= 100; j += (j < 20 ? 1 : 10)) {
      out.push_back(hard(timed([&] {
                           const auto [lhs, rhs] = traces::partial_fraction_bridge(j, s);
                           return equality_report("trace.bridge", {{"j", j}, {"s", complex_json(s)}}, lhs,
                                                  rhs, 0.0);
                         }),
                         1e-12, config));
    }
  }
  for (Complex s : {Complex{0.75, -1.0}, Complex{0.6, -2.0}, Complex{0.9, -4.0}}) {
    for (int n = 1; n <= 3; ++n) {
      traces::TraceParams p;
      p.s = s;
      p.digits = std::max(config.digits, traces::required_digits(n));
      out.push_back(hard(traces::cross_path_check(n, p), 1e-8, config));
    }
  }
  for (int L : {0, 1}) {
    out.push_back(hard(traces::poisson_reduction_check(1, L, {0.75, 2.0}), 1e-6, config));
  }
}

using SuiteFn = void (*)(const RunConfig&, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"race", suite_race},   {"reflection", suite_reflection}, {"laplace", suite_laplace},
      {"fresnel", suite_fresnel}, {"theta", suite_theta},       {"newton", suite_newton},
      {"traces", suite_traces}};
  return table;
}

std::vector<Check> run_traces(const RunConfig& config) {
  std::vector<Check> out;
  const traces::TraceParams p = trace_params(config, config.s);
  for (int n = 1; n <= config.nMax; ++n) {
    traces::TraceParams q = p;
    q.digits = std::max(q.digits, traces::required_digits(n));
    out.push_back(hard(traces::cross_path_check(n, q), 1e-8, config));
  }
  out.push_back(claim(traces::tr_cg_total(p)));
  out.push_back(claim(traces::tail_envelope_audit(p)));
  out.push_back(claim(traces::hausdorff_moment_audit(config.s, 20, 20, p.digits)));
  out.push_back(claim(rhfe::polar_sign_audit(config.s)));
  for (int n = 1; n <= config.nMax; ++n) {
    out.push_back(claim(rhfe::decomposition_audit(n, config.s, config.L, p)));
  }
  out.push_back(claim(traces::poisson_vanishing_audit(config.n, config.s, config.L)));
  return out;
}

std::vector<Check> run_gram(const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> logCoord(std::log(0.05), std::log(5.0));
  std::normal_distribution<double> weight(0.0, 1.0);
  laplace::GramSample sample;
  for (int i = 0; i < config.points; ++i) {
    sample.points.push_back({std::exp(logCoord(rng)), std::exp(logCoord(rng))});
    sample.weights.push_back(weight(rng));
  }
  std::vector<Check> out;
  out.push_back(claim(laplace::gram_psd_check(sample)));
  out.push_back(claim(laplace::lhpd_falsify(config.budget, config.points, config.seed)));
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (tol && !(*tol > 0.0 && *tol < 1.0)) throw DomainError("--tol must lie in (0, 1)");
  if (digits < BigReal::kMinDigits || digits > BigReal::kMaxDigits) {
    throw DomainError("--digits must lie in [15, 200]");
  }
  if (!is_finite(s)) throw DomainError("--re and --im must be finite");
  if (n < 1) throw DomainError("--n must be >= 1");
  if (nMax < 1 || nMax > 6) throw DomainError("--nmax must lie in [1, 6]");
  if (L < 0 || L > 50) throw DomainError("--L must lie in [0, 50]");
  if (jMax < 1) throw DomainError("--jmax must be >= 1");
  if (points < 2 || points > 64) throw DomainError("--points must lie in [2, 64]");
  if (budget < 0) throw DomainError("--budget must be >= 0");
  if (order < 1 || order > 8) throw DomainError("--order must lie in [1, 8]");
  if (!(h > 0.0 && h < 1.0)) throw DomainError("--step must lie in (0, 1)");
  if (!(grid.x0 > 0.0 && grid.y0 > 0.0 && grid.x1 >= grid.x0 && grid.y1 >= grid.y0)) {
    throw DomainError("cm grid needs 0 < x0 <= x1 and 0 < y0 <= y1");
  }
  if (grid.nx < 1 || grid.ny < 1) throw DomainError("cm grid needs nx, ny >= 1");
  const bool known = suite == "all" || std::any_of(suites().begin(), suites().end(),
                                                     [&](const auto& e) { return e.first == suite; });
  if (!known) throw DomainError("unknown suite '" + suite + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : suites()) v.push_back(e.first);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const RunConfig& config) {
  std::vector<Check> out;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) fn(config, out);
  }
  if (out.empty()) throw DomainError("unknown suite '" + suite + "'");
  return out;
}

std::vector<Check> run_ledger(const RunConfig& config) {
  std::vector<Check> out;
  const Complex s = config.s;
  const traces::TraceParams p = trace_params(config, s);

  laplace::GramSample sample;
  sample.points = {{1.0, 0.1}, {0.1, 1.0}};
  sample.weights = {1.0, -1.0};
  out.push_back(claim(laplace::gram_psd_check(sample)));
  out.push_back(claim(laplace::lhpd_falsify(config.budget, config.points, config.seed)));
  out.push_back(claim(laplace::cm_scan(config.grid, config.order, config.h)));
  out.push_back(claim(laplace::rep_green_fresnel({1.0, 0.5}).factored));
  out.push_back(claim(fresnel::lemma_positivity_audit(200, config.seed)));
  out.push_back(claim(rhfe::polar_sign_audit(s)));
  for (int n = 1; n <= config.nMax; ++n) {
    out.push_back(claim(rhfe::decomposition_audit(n, s, config.L, p)));
  }
  out.push_back(claim(traces::poisson_vanishing_audit(config.n, s, config.L)));
  out.push_back(claim(traces::poisson_decay_audit(config.n, {0.75, 2.0}, std::max(config.L, 2))));
  out.push_back(claim(traces::poisson_coarse_bound_audit(config.n, 1, {0.75, 2.0}, 1)));
  out.push_back(claim(traces::hausdorff_moment_audit(s, 20, 20, p.digits)));
  out.push_back(claim(traces::tr_cg_total(p)));
  out.push_back(claim(traces::tail_envelope_audit(p)));
  for (auto& r : rhfe::rhfe_sweep(rhfe::default_grid(), p, {}, config.threads)) {
    out.push_back(claim(std::move(r)));
  }

  std::set<std::string> seen;
  for (const auto& c : out) seen.insert(c.report.claimId);
  for (const auto& id : manifest::claim_ids()) {
    if (!seen.count(id)) throw std::logic_error("ledger is missing claim '" + id + "'");
  }
  return out;
}

std::vector<Check> run_command(const RunConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::kVerify: return run_suite(config.suite, config);
    case Command::kTraces: return run_traces(config);
    case Command::kRhfe: {
      const traces::TraceParams p = trace_params(config, config.s);
      return {claim(rhfe::rhfe_residual(config.s, p, {}, true))};
    }
    case Command::kGram: return run_gram(config);
    case Command::kCm: return {claim(laplace::cm_scan(config.grid, config.order, config.h))};
    case Command::kLedger: return run_ledger(config);
  }
  return {};
}

namespace {

ordered_json report_json(const ClaimReport& r) {
  const manifest::Entry* entry = manifest::find(r.claimId);
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  j["claimId"] = r.claimId;
  j["paperEq"] = entry ? entry->paperEq : "";
  j["inputs"] = ordered_json::parse(r.inputs.dump());
  j["lhs"] = ordered_json::parse(to_json(r.lhs).dump());
  j["rhs"] = ordered_json::parse(to_json(r.rhs).dump());
  j["absResidual"] = ordered_json::parse(json_number(r.absResidual).dump());
  j["relResidual"] = ordered_json::parse(json_number(r.relResidual).dump());
  j["errorEstimate"] = ordered_json::parse(json_number(r.errorEstimate).dump());
  j["status"] = to_string(r.status);
  j["wallTimeMs"] = r.wallTimeMs;
  return j;
}

std::string csv_number(double x) { return std::isfinite(x) ? json(x).dump() : ""; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Complex as_complex(const ClaimValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return {*d, 0.0};
  return std::get<Complex>(v);
}

}  // namespace

std::string render_json(const std::vector<Check>& checks) {
  ordered_json all = ordered_json::array();
  for (const auto& c : checks) all.push_back(report_json(c.report));
  return all.dump(2) + "\n";
}

std::string render_csv(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "schemaVersion,claimId,paperEq,lhs_re,lhs_im,rhs_re,rhs_im,absResidual,relResidual,"
        "errorEstimate,status,wallTimeMs,inputs\n";
  for (const auto& c : checks) {
    const ClaimReport& r = c.report;
    const manifest::Entry* entry = manifest::find(r.claimId);
    const Complex lhs = as_complex(r.lhs);
    const Complex rhs = as_complex(r.rhs);
    os << kSchemaVersion << ',' << csv_quote(r.claimId) << ',' << csv_quote(entry ? entry->paperEq : "")
       << ',' << csv_number(lhs.real()) << ',' << csv_number(lhs.imag()) << ','
       << csv_number(rhs.real()) << ',' << csv_number(rhs.imag()) << ',' << csv_number(r.absResidual)
       << ',' << csv_number(r.relResidual) << ',' << csv_number(r.errorEstimate) << ','
       << to_string(r.status) << ',' << csv_number(r.wallTimeMs) << ',' << csv_quote(r.inputs.dump())
       << '\n';
  }
  return os.str();
}

int exit_code(const std::vector<Check>& checks, bool strictClaims) {
  const bool hardFailure =
      std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.hard && !c.passed; });
  if (hardFailure) return kExitHardFailure;
  const bool violated = std::any_of(checks.begin(), checks.end(),
                                    [](const Check& c) { return !c.hard && c.report.violated(); });
  if (strictClaims && violated) return kExitClaimViolated;
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  try {
    checks = run_command(config);
  } catch (const DomainError& e) {
    err << "rhaudit: invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PrecisionError& e) {
    err << "rhaudit: invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AmplitudeError& e) {
    err << "rhaudit: invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rhaudit: internal error: " << e.what() << '\n';
    return kExitHardFailure;
  }

  const std::string text = config.format == Format::kJson ? render_json(checks) : render_csv(checks);
  if (config.out.empty()) {
    out << text;
    out.flush();
    if (!out) {
      err << "rhaudit: cannot write report\n";
      return kExitIo;
    }
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      err << "rhaudit: cannot write report to '" << config.out << "'\n";
      return kExitIo;
    }
  }

  int hardFailures = 0;
  int violated = 0;
  for (const auto& c : checks) {
    if (c.hard && !c.passed) ++hardFailures;
    if (!c.hard && c.report.violated()) ++violated;
  }
  err << "rhaudit: " << checks.size() << " reports, " << hardFailures << " hard failures, " << violated
      << " claims violated\n";
  return exit_code(checks, config.strictClaims);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Numerical audit of zeta identities and claims", "rhaudit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; flags take precedence");

  std::map<std::string, Format> formats{{"json", Format::kJson}, {"csv", Format::kCsv}};
  double re = config.s.real();
  double im = config.s.imag();
  double tol = 0.0;
  app.add_option("--out", config.out, "Report file (default: standard output)");
  app.add_option("--format", config.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))->option_text("json|csv");
  app.add_option("--seed", config.seed, "Random seed");
  app.add_option("--digits", config.digits, "Extended-precision digits");
  auto* tolOption = app.add_option("--tol", tol, "Override every hard-identity tolerance");
  app.add_flag("--strict-claims", config.strictClaims, "Exit 3 when any claim is VIOLATED");
  app.add_option("--suite", config.suite, "Verification suite")->check(CLI::IsMember(suite_names()));
  app.add_option("--re", re, "re(s)");
  app.add_option("--im", im, "im(s)");
  app.add_option("--n", config.n, "Theta index n");
  app.add_option("--nmax", config.nMax, "Number of trace blocks");
  app.add_option("--L", config.L, "Poisson period index");
  app.add_option("--jmax", config.jMax, "Trace series cap");
  app.add_option("--points", config.points, "Gram sample size");
  app.add_option("--budget", config.budget, "Optimizer evaluation budget");
  app.add_option("--order", config.order, "Maximum difference order");
  app.add_option("--step", config.h, "Difference step h");
  app.add_option("--x0", config.grid.x0, "cm grid lower x");
  app.add_option("--x1", config.grid.x1, "cm grid upper x");
  app.add_option("--y0", config.grid.y0, "cm grid lower y");
  app.add_option("--y1", config.grid.y1, "cm grid upper y");
  app.add_option("--nx", config.grid.nx, "cm grid points in x");
  app.add_option("--ny", config.grid.ny, "cm grid points in y");
  app.add_option("--threads", config.threads, "Worker threads for sweeps (0: hardware)");

  const std::vector<std::pair<std::string, Command>> commands{
      {"verify", Command::kVerify}, {"traces", Command::kTraces}, {"rhfe", Command::kRhfe},
      {"gram", Command::kGram},     {"cm", Command::kCm},         {"ledger", Command::kLedger}};
  const std::map<std::string, std::string> help{
      {"verify", "Run hard-identity verification suites"},
      {"traces", "Trace series, cross-path and positivity audits"},
      {"rhfe", "Single functional-equation residual at s"},
      {"gram", "Gram positivity and falsification search"},
      {"cm", "Complete-monotonicity sign scan"},
      {"ledger", "One report for every audited claim"}};
  for (const auto& [name, command] : commands) {
    const Command c = command;
    app.add_subcommand(name, help.at(name))->callback([&config, c] { config.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    err << "rhaudit: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    if (code == 0) return kExitOk;
    return kExitUsage;
  }
  config.s = {re, im};
  if (tolOption->count() > 0) config.tol = tol;
  return run(config, out, err);
}

}  // namespace rhaudit::cli

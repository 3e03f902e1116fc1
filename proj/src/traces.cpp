#include "rhaudit/traces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rhaudit/errors.hpp"
#include "rhaudit/specfun.hpp"

namespace rhaudit::traces {

namespace {

constexpr double kLn10 = 2.302585092994046;

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int peak_index(int n) { return static_cast<int>(std::ceil(kPi * n * n)); }

}  // namespace

void TraceParams::validate() const {
  require_finite(s, "trace parameter s");
  if (s.real() < 0.0 || s.real() > 1.0) throw DomainError("trace parameters need re(s) in [0, 1]");
  if (s.imag() == 0.0) throw DomainError("trace parameters need im(s) != 0");
  if (nMax < 0 || LMax < 0) throw DomainError("trace parameters need nMax, LMax >= 0");
  if (digits < BigReal::kMinDigits || digits > BigReal::kMaxDigits) {
    throw PrecisionError("trace digits must lie in [15, 200]");
  }
  if (jMax < peak_index(std::max(nMax, 1)) + 20) {
    throw PrecisionError("jMax = " + std::to_string(jMax) + " does not pass the peak term");
  }
}

double trace_t(int j, Complex s) {
  if (j < 0) throw DomainError("trace index must be nonnegative");
  const double a = std::norm(s + 2.0 * j);
  const double b = std::norm(2.0 * j + 1.0 - s);
  if (a == 0.0 || b == 0.0) throw PoleError("trace sequence pole at j = " + std::to_string(j));
  return (4.0 * j + 1.0) / (a * b);
}

BigReal trace_t(int j, Complex s, int digits) {
  if (j < 0) throw DomainError("trace index must be nonnegative");
  const BigReal u(s.real(), digits);
  const BigReal v(s.imag(), digits);
  const BigReal v2 = v * v;
  const BigReal p = u + BigReal(2L * j, digits);
  const BigReal q = BigReal(2L * j + 1, digits) - u;
  const BigReal a = p * p + v2;
  const BigReal b = q * q + v2;
  if (a.is_zero() || b.is_zero()) throw PoleError("trace sequence pole at j = " + std::to_string(j));
  return BigReal(4L * j + 1, digits) / (a * b);
}

double trace_t_product(int j, Complex s) {
  if (j < 0) throw DomainError("trace index must be nonnegative");
  const double w = 4.0 * j + 1.0;
  const double first = std::norm((0.5 - s) / w + 0.5);
  const double last = std::norm(s + 2.0 * j);
  if (first == 0.0 || last == 0.0) throw PoleError("trace sequence pole at j = " + std::to_string(j));
  return 1.0 / first / w / last;
}

ClaimReport trace_decomposition_check(int j, Complex s) {
  Stopwatch clock;
  const double direct = trace_t(j, s);
  const double product = trace_t_product(j, s);
  ClaimReport r = equality_report("trace.decomposition", {{"j", j}, {"s", complex_json(s)}}, direct,
                                  product, 16.0 * std::numeric_limits<double>::epsilon() * direct);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

std::pair<double, double> partial_fraction_bridge(int j, Complex s) {
  const double u = s.real();
  const double v = s.imag();
  const double a = std::norm(2.0 * j + s);
  const double b = std::norm(2.0 * j + 1.0 - s);
  if (a == 0.0 || b == 0.0) throw PoleError("trace sequence pole at j = " + std::to_string(j));
  return {v * (1.0 / a - 1.0 / b), (4.0 * j + 1.0) * (1.0 - 2.0 * u) * v / (a * b)};
}

ClaimReport hausdorff_moment_audit(Complex s, int jMax, int kMax, int digits) {
  if (jMax < 0 || kMax < 0) throw DomainError("moment audit needs jMax, kMax >= 0");
  Stopwatch clock;
  const int length = jMax + kMax + 1;
  std::vector<BigReal> row;
  row.reserve(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) row.push_back(trace_t(j, s, digits));
  const double scale = row.front().to_double();

  double minEntry = std::numeric_limits<double>::infinity();
  int negatives = 0;
  nlohmann::json firstViolation = nullptr;
  nlohmann::json pattern = nlohmann::json::array();
  for (int k = 0; k <= kMax; ++k) {
    if (k > 0) {
      // (-Delta) f_j = f_j - f_{j+1}, applied k times, is (-1)^k Delta^k f_j.
      for (std::size_t j = 0; j + 1 < row.size(); ++j) row[j] -= row[j + 1];
      row.pop_back();
    }
    std::string signs;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int sign = row[j].sign();
      signs.push_back(sign > 0 ? '+' : sign < 0 ? '-' : '0');
      const double value = row[j].to_double();
      minEntry = std::min(minEntry, value);
      if (sign < 0) {
        ++negatives;
        if (firstViolation.is_null()) {
          firstViolation = {{"k", k}, {"j", j}, {"value", row[j].to_string(20)}};
        }
      }
    }
    pattern.push_back(signs);
  }
  nlohmann::json inputs{{"s", complex_json(s)},  {"jMax", jMax},
                        {"kMax", kMax},          {"digits", digits},
                        {"negativeEntries", negatives}, {"firstViolation", firstViolation},
                        {"signPattern", pattern}};
  if (!(s.real() > 0.5 && s.real() < 1.0 && s.imag() < 0.0)) {
    inputs["warn"] = "s outside re(s) in (1/2, 1), im(s) < 0";
  }
  const double rounding = std::ldexp(std::pow(10.0, 1 - digits), kMax) * scale;
  ClaimReport r = inequality_report("trace.hausdorff", std::move(inputs), minEntry, 0.0, rounding);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

int required_digits(int n) {
  return 15 + static_cast<int>(std::ceil(kPi * n * n * std::log10(std::exp(1.0))));
}

SeriesResult tr_cg_n_series(int n, const TraceParams& p) {
  p.validate();
  if (n < 1) throw DomainError("trace series index n must be >= 1");
  if (p.digits < required_digits(n)) {
    throw PrecisionError("n = " + std::to_string(n) + " needs at least " +
                         std::to_string(required_digits(n)) + " digits");
  }
  if (p.jMax < peak_index(n) + 20) {
    throw PrecisionError("jMax does not pass the peak term for n = " + std::to_string(n));
  }
  const int digits = p.digits;
  const double c = kPi * n * n;
  const double logC = std::log(c);
  const double absS = std::abs(p.s);
  const int tailStart = std::max(peak_index(n), static_cast<int>(std::ceil(2.0 * absS + 2.0)));
  const BigReal bigC = BigReal::pi(digits) * static_cast<double>(n * n);

  BigReal coef(1L, digits);
  BigReal sum(digits);
  double maxLog = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= p.jMax; ++j) {
    const double tj = trace_t(j, p.s);
    sum += coef * trace_t(j, p.s, digits);
    maxLog = std::max(maxLog, j * logC - std::lgamma(j + 1.0) + std::log(tj));
    if (j >= tailStart) {
      // For i > j: t_i <= (4i+1)/((2i-|s|)^2 (2i+1-|s|)^2), decreasing in i,
      // and consecutive coefficient ratios are at most c/(j+2) < 1.
      const double i = j + 1.0;
      const double envelope =
          (4.0 * i + 1.0) / std::pow((2.0 * i - absS) * (2.0 * i + 1.0 - absS), 2.0);
      const double q = c / (j + 2.0);
      const double logTail =
          i * logC - std::lgamma(i + 1.0) + std::log(envelope) - std::log1p(-q);
      if (logTail < maxLog + (2.0 - digits) * kLn10) {
        return {sum, j + 1, std::exp(logTail)};
      }
    }
    coef *= bigC;
    coef /= -(j + 1.0);
  }
  throw PrecisionError("trace series not certified within jMax = " + std::to_string(p.jMax));
}

quad::QuadResult<double> tr_cg_sigma(int n, Complex z, SigmaSign sign, const quad::QuadSpec& spec) {
  require_finite(z, "sigma argument");
  if (n < 1) throw DomainError("sigma index n must be >= 1");
  const double u = z.real();
  const double v = z.imag();
  if (v == 0.0) throw DomainError("sigma needs im(z) != 0");
  if (u < 0.0) throw DomainError("sigma needs re(z) >= 0");
  const double c = (sign == SigmaSign::kAlternating ? -1.0 : 1.0) * kPi * n * n;
  // exp(-+c e^{-2t}) = 1 + expm1(...): the constant part integrates in closed
  // form, the rest decays like e^{-(u+2)t}.
  auto f = [=](double t) { return std::exp(-u * t) * std::sin(v * t) * std::expm1(c * std::exp(-2.0 * t)); };
  auto r = quad::integrate_semi_infinite(f, 0.0, spec);
  quad::QuadResult<double> out = r;
  out.value = (v / (u * u + v * v) + r.value) / v;
  out.errorEstimate = r.errorEstimate / std::abs(v);
  out.converged = r.converged;
  return out;
}

ClaimReport cross_path_check(int n, const TraceParams& p, const quad::QuadSpec& spec) {
  Stopwatch clock;
  const auto series = tr_cg_n_series(n, p);
  const double zt = specfun::trivial_zeta(p.s);
  const auto left = tr_cg_sigma(n, p.s, SigmaSign::kAlternating, spec);
  const auto right = tr_cg_sigma(n, 1.0 - p.s, SigmaSign::kAlternating, spec);
  const double v = p.s.imag();
  const double lhs = zt * series.value.to_double();
  const double rhs = -v * (left.value - right.value);
  const double err = std::abs(zt) * series.tailBound +
                     std::abs(v) * (left.errorEstimate + right.errorEstimate);
  nlohmann::json inputs{{"n", n},
                        {"s", complex_json(p.s)},
                        {"digits", p.digits},
                        {"termsUsed", series.termsUsed},
                        {"sigmaConverged", left.converged && right.converged}};
  ClaimReport r = equality_report("trace.cross_path", std::move(inputs), lhs, rhs, err);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

double paper_tail_envelope(Complex s, int nMax) {
  const double start = nMax + 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (int d = 1; d <= 2000; ++d) {
    const double m = 2.0 * d;
    const double zetaTail = std::exp(-m * std::log(start)) + std::exp((1.0 - m) * std::log(start)) / (m - 1.0);
    const double logFront = std::lgamma(d + 1.0) - d * std::log(kPi);
    double total = 0.0;
    for (Complex z : {s, 1.0 - s}) total += 1.0 / std::norm(z - m);
    const double value = std::abs(s.imag()) * std::exp(logFront) * zetaTail * total;
    if (std::isfinite(value)) best = std::min(best, value);
  }
  return best;
}

namespace {

struct NextBlock {
  double magnitude = std::numeric_limits<double>::infinity();
  int n = 0;
};

NextBlock next_block(const TraceParams& p) {
  const int n = p.nMax + 1;
  if (required_digits(n) > BigReal::kMaxDigits) return {};
  TraceParams q = p;
  q.nMax = n;
  q.digits = std::max(p.digits, required_digits(n));
  q.jMax = std::max(p.jMax, peak_index(n) + 20);
  return {std::abs(tr_cg_n_series(n, q).value.to_double()), n};
}

}  // namespace

ClaimReport tr_cg_total(const TraceParams& p) {
  p.validate();
  Stopwatch clock;
  const BigReal u(p.s.real(), p.digits);
  const BigReal v(p.s.imag(), p.digits);
  const BigReal one(1L, p.digits);
  const BigReal um = u - one;
  const BigReal v2 = v * v;
  const BigReal t0 = one / ((u * u + v2) * (um * um + v2));
  BigReal total = t0;
  nlohmann::json blocks = nlohmann::json::array();
  double seriesTails = 0.0;
  for (int n = 1; n <= p.nMax; ++n) {
    const SeriesResult r = tr_cg_n_series(n, p);
    total += r.value;
    seriesTails += r.tailBound;
    blocks.push_back({{"n", n}, {"value", r.value.to_double()}, {"terms", r.termsUsed}});
  }
  const NextBlock next = next_block(p);
  const double envelope = paper_tail_envelope(p.s, p.nMax);
  const double value = total.to_double();
  nlohmann::json inputs{{"s", complex_json(p.s)},
                        {"nMax", p.nMax},
                        {"digits", p.digits},
                        {"jMax", p.jMax},
                        {"t0", t0.to_double()},
                        {"blocks", blocks},
                        {"value", total.to_string(30)},
                        {"sign", total.sign() > 0 ? "+" : total.sign() < 0 ? "-" : "0"},
                        {"paperTailEnvelope", json_number(envelope)},
                        {"observedNextBlock", json_number(next.magnitude)},
                        {"positive", total.sign() > 0}};
  ClaimReport r = inequality_report("trace.positivity", std::move(inputs), value, 0.0,
                                    next.magnitude + seriesTails);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

ClaimReport tail_envelope_audit(const TraceParams& p) {
  p.validate();
  Stopwatch clock;
  const NextBlock next = next_block(p);
  const double envelope = paper_tail_envelope(p.s, p.nMax);
  nlohmann::json inputs{{"s", complex_json(p.s)}, {"nMax", p.nMax}, {"nextBlockIndex", next.n}};
  ClaimReport r = inequality_report("trace.tail_envelope", std::move(inputs), envelope, next.magnitude,
                                    std::pow(10.0, 2 - p.digits) * next.magnitude);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

namespace {

void check_poisson_args(int n, int L, Complex z) {
  require_finite(z, "Poisson argument");
  if (n < 1) throw DomainError("Poisson term needs n >= 1");
  if (L < 0) throw DomainError("Poisson term needs L >= 0");
  if (!(z.imag() > 0.0)) throw DomainError("Poisson term needs im(z) > 0");
  if (!(z.real() > 0.0)) throw DomainError("Poisson term needs re(z) > 0");
}

Complex upper(Complex z) { return z.imag() < 0.0 ? std::conj(z) : z; }

}  // namespace

quad::QuadResult<double> poisson_term_result(int n, int L, Complex z, const quad::QuadSpec& spec) {
  check_poisson_args(n, L, z);
  const double u = z.real();
  const double v = z.imag();
  const double c = kPi * n * n;
  const double shift = 2.0 * kPi * L / v;
  // In y = w - N the phase sin(v(y + N)) = sin(vy); below the cut the double
  // exponential is below e^{-800}.
  const double cut = -0.5 * std::log(800.0 / c);
  const double lower = std::max(-shift, cut);
  auto f = [=](double y) { return std::exp(-u * y) * std::sin(v * y) * std::exp(-c * std::exp(-2.0 * y)); };
  auto r = quad::integrate_semi_infinite(f, lower, spec.with_transform(quad::Transform::kNone));
  r.value /= v;
  r.errorEstimate /= v;
  return r;
}

double poisson_term(int n, int L, Complex z, const quad::QuadSpec& spec) {
  return poisson_term_result(n, L, z, spec).value;
}

quad::QuadrantResult<Complex> poisson_term_quadrant(int n, int L, Complex z,
                                                    const quad::QuadSpec& spec) {
  check_poisson_args(n, L, z);
  const double c = kPi * n * n;
  const double shift = 2.0 * kPi * L / z.imag();
  const double front = std::exp(z.real() * shift);
  const Complex zc = std::conj(z);
  auto f2 = [=](double l1, double l2) {
    const double w = l1 + l2;
    return front * std::exp(-c * std::exp(2.0 * shift - 2.0 * w)) * std::exp(-(z * l1 + zc * l2));
  };
  return quad::integrate_quadrant(f2, spec.with_transform(quad::Transform::kNone));
}

ClaimReport poisson_reduction_check(int n, int L, Complex z, const quad::QuadSpec& spec) {
  Stopwatch clock;
  const auto line = poisson_term_result(n, L, z, spec);
  const auto plane = poisson_term_quadrant(n, L, z, spec);
  nlohmann::json inputs{{"n", n},
                        {"L", L},
                        {"z", complex_json(z)},
                        {"converged", line.converged && plane.converged}};
  ClaimReport r = equality_report("poisson.reduction", std::move(inputs), Complex(line.value, 0.0),
                                  plane.value, line.errorEstimate + plane.errorEstimate);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

double poisson_coarse_bound(int n, int L, Complex z, int r) {
  if (r < 1) throw DomainError("coarse bound needs r >= 1");
  check_poisson_args(n, L, z);
  const double u = z.real();
  const double gap = u - 2.0 * r;
  const double logValue = std::lgamma(r + 1.0) + (2.0 * kPi / z.imag()) * gap * L -
                          r * std::log(kPi) - 2.0 * r * std::log(static_cast<double>(n));
  return std::exp(logValue) / (gap * gap);
}

quad::QuadResult<double> poisson_part(int n, int L, Complex s, const quad::QuadSpec& spec) {
  const double v = s.imag();
  if (v == 0.0) throw DomainError("Poisson part needs im(s) != 0");
  auto plus = poisson_term_result(n, L, upper(1.0 - s), spec);
  auto minus = poisson_term_result(n, L, upper(s), spec);
  quad::QuadResult<double> out;
  out.value = v * (plus.value - minus.value);
  out.errorEstimate = std::abs(v) * (plus.errorEstimate + minus.errorEstimate);
  out.evaluations = plus.evaluations + minus.evaluations;
  out.converged = plus.converged && minus.converged;
  return out;
}

ClaimReport poisson_vanishing_audit(int n, Complex s, int LMax, const quad::QuadSpec& spec) {
  if (LMax < 0) throw DomainError("LMax must be >= 0");
  Stopwatch clock;
  nlohmann::json trend = nlohmann::json::array();
  quad::QuadResult<double> last;
  for (int L = 0; L <= LMax; ++L) {
    last = poisson_part(n, L, s, spec);
    trend.push_back({{"L", L}, {"value", last.value}, {"error", last.errorEstimate}});
  }
  nlohmann::json inputs{{"n", n}, {"s", complex_json(s)}, {"LMax", LMax}, {"trend", trend}};
  ClaimReport r = equality_report("poisson.vanishing", std::move(inputs), last.value, 0.0,
                                  last.errorEstimate);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

ClaimReport poisson_decay_audit(int n, Complex z, int LMax, const quad::QuadSpec& spec) {
  if (LMax < 2) throw DomainError("decay audit needs LMax >= 2");
  Stopwatch clock;
  std::vector<quad::QuadResult<double>> values;
  nlohmann::json trend = nlohmann::json::array();
  for (int L = 1; L <= LMax; ++L) {
    values.push_back(poisson_term_result(n, L, z, spec));
    trend.push_back({{"L", L}, {"value", values.back().value}, {"error", values.back().errorEstimate}});
  }
  double margin = std::numeric_limits<double>::infinity();
  double error = 0.0;
  bool strictly = true;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double step = std::abs(values[i].value) - std::abs(values[i + 1].value);
    strictly = strictly && step > 0.0;
    if (step < margin) {
      margin = step;
      error = values[i].errorEstimate + values[i + 1].errorEstimate;
    }
  }
  nlohmann::json inputs{{"n", n}, {"z", complex_json(z)}, {"LMax", LMax}, {"trend", trend},
                        {"strictlyDecreasingAsComputed", strictly}};
  ClaimReport r = inequality_report("poisson.decay", std::move(inputs), margin, 0.0, error);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

ClaimReport poisson_coarse_bound_audit(int n, int L, Complex z, int r, const quad::QuadSpec& spec) {
  Stopwatch clock;
  const auto value = poisson_term_result(n, L, z, spec);
  const double bound = poisson_coarse_bound(n, L, z, r);
  nlohmann::json inputs{{"n", n}, {"L", L}, {"z", complex_json(z)}, {"r", r}};
  ClaimReport report = inequality_report("poisson.coarse_bound", std::move(inputs), bound,
                                         std::abs(value.value), value.errorEstimate);
  report.wallTimeMs = clock.elapsed_ms();
  return report;
}

}  // namespace rhaudit::traces

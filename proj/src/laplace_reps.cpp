#include "rhaudit/laplace_reps.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rhaudit/amplitude.hpp"
#include "rhaudit/errors.hpp"
#include "rhaudit/fresnel.hpp"

namespace rhaudit::laplace {

namespace {

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void require_right_half(Complex z, const char* what) {
  require_finite(z, what);
  if (!(z.real() > 0.0)) throw DomainError(std::string(what) + " needs re(z) > 0");
}

nlohmann::json points_json(const std::vector<Point>& points) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : points) out.push_back({p[0], p[1]});
  return out;
}

constexpr double kEigenTolerance = 1e-10;

}  // namespace

Complex complex_form(Complex z, double l1, double l2) { return z * l1 + std::conj(z) * l2; }

double real_form(Complex z, double l1, double l2) { return z.real() * l1 + z.imag() * l2; }

ClaimReport rep_inverse_z(Complex z, const quad::QuadSpec& spec) {
  require_right_half(z, "inverse representation");
  Stopwatch clock;
  auto r = quad::integrate_semi_infinite([z](double l) { return std::exp(-z * l); }, 0.0,
                                         spec.with_transform(quad::Transform::kNone));
  ClaimReport report = equality_report("rep.inverse_z", {{"z", complex_json(z)}, {"converged", r.converged}},
                                       r.value, 1.0 / z, r.errorEstimate);
  report.wallTimeMs = clock.elapsed_ms();
  return report;
}

ClaimReport rep_green_complex(Complex z, const quad::QuadSpec& spec) {
  require_right_half(z, "Green representation");
  Stopwatch clock;
  const Complex zc = std::conj(z);
  auto r = quad::integrate_quadrant([z, zc](double l1, double l2) { return std::exp(-(z * l1 + zc * l2)); },
                                    spec.with_transform(quad::Transform::kNone));
  nlohmann::json inputs{{"z", complex_json(z)},
                        {"outerConverged", r.outerConverged},
                        {"innerConverged", r.innerConverged}};
  ClaimReport report = equality_report("rep.green_complex", std::move(inputs), r.value,
                                       Complex(1.0 / std::norm(z)), r.errorEstimate);
  report.wallTimeMs = clock.elapsed_ms();
  return report;
}

FresnelGreenReports rep_green_fresnel(Complex z, const quad::QuadSpec& spec) {
  require_right_half(z, "Fresnel Green representation");
  const double x = z.real();
  const double y = z.imag();
  const double target = 1.0 / std::norm(z);
  FresnelGreenReports out;
  {
    Stopwatch clock;
    auto r = quad::integrate_quadrant(
        [x, y](double l1, double l2) { return std::exp(-x * (l1 + l2)) * std::cos(y * (l2 - l1)); },
        spec.with_transform(quad::Transform::kNone));
    out.direct = equality_report("fresnel.f22_direct", {{"z", complex_json(z)}, {"converged", r.converged}},
                                 r.value, target, r.errorEstimate);
    out.direct.wallTimeMs = clock.elapsed_ms();
  }
  {
    Stopwatch clock;
    auto first = quad::integrate_semi_infinite([x](double u) { return std::exp(-2.0 * x * u); }, 0.0,
                                               spec.with_transform(quad::Transform::kNone));
    double second = 0.0;
    double secondErr = 0.0;
    if (y == 0.0) {
      auto r = quad::integrate_semi_infinite([x](double v) { return std::exp(-x * v); }, 0.0,
                                             spec.with_transform(quad::Transform::kNone));
      second = r.value;
      secondErr = r.errorEstimate;
    } else {
      auto r = fresnel::fresnel_cos_result(fresnel::AmplitudeSpec::exp(x), std::abs(y), spec);
      second = r.value;
      secondErr = r.errorEstimate;
    }
    const double product = first.value * second;
    const double err = first.errorEstimate * std::abs(second) + secondErr * std::abs(first.value);
    nlohmann::json inputs{{"z", complex_json(z)},
                          {"firstFactor", first.value},
                          {"secondFactor", second},
                          {"ratioToTarget", product / target}};
    out.factored = equality_report("fresnel.f22_factored", std::move(inputs), product, target, err);
    out.factored.wallTimeMs = clock.elapsed_ms();
  }
  return out;
}

void GramSample::validate() const {
  if (points.empty()) throw DomainError("Gram sample needs at least one point");
  if (points.size() > 64) throw DomainError("Gram sample limited to 64 points");
  if (!weights.empty() && weights.size() != points.size()) {
    throw DomainError("Gram sample weights must match the points");
  }
  for (const auto& p : points) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || p[0] < minOffset || p[1] < minOffset) {
      throw DomainError("Gram sample points must lie in the shifted quadrant");
    }
  }
  for (double w : weights) require_finite(w, "Gram weight");
}

std::vector<double> gram_matrix(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = points[i][0] + points[j][0];
      const double b = points[i][1] + points[j][1];
      m[i * n + j] = 1.0 / (a * a + b * b);
    }
  }
  return m;
}

namespace {

struct Spectrum {
  Eigen::VectorXd eigenvalues;
  double maxAbs = 0.0;
  Eigen::MatrixXd matrix;
};

Spectrum spectrum(const std::vector<Point>& points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  const auto m = gram_matrix(points);
  Spectrum s;
  s.matrix = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(m.data(), n, n);
  s.maxAbs = s.matrix.cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.matrix, Eigen::EigenvaluesOnly);
  s.eigenvalues = solver.eigenvalues();
  return s;
}

ClaimReport psd_report(std::string id, nlohmann::json inputs, double lambdaMin, double tolerance) {
  ClaimReport r;
  r.claimId = std::move(id);
  r.inputs = std::move(inputs);
  r.lhs = lambdaMin;
  r.rhs = 0.0;
  r.absResidual = std::max(0.0, -lambdaMin);
  r.relResidual = std::abs(lambdaMin) > 0.0 ? r.absResidual / std::abs(lambdaMin) : 0.0;
  r.errorEstimate = tolerance;
  r.status = classify(r.absResidual, r.errorEstimate);
  return r;
}

}  // namespace

double gram_lambda_min(const std::vector<Point>& points) { return spectrum(points).eigenvalues(0); }

ClaimReport gram_psd_check(const GramSample& sample) {
  sample.validate();
  Stopwatch clock;
  const Spectrum s = spectrum(sample.points);
  const auto n = sample.points.size();
  const double lambdaMin = s.eigenvalues(0);
  const double tolerance = static_cast<double>(n) * kEigenTolerance * s.maxAbs;
  nlohmann::json eigen = nlohmann::json::array();
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) eigen.push_back(s.eigenvalues(i));
  nlohmann::json inputs{{"n", n},
                        {"points", points_json(sample.points)},
                        {"eigenvalues", eigen},
                        {"maxEntry", s.maxAbs}};
  if (!sample.weights.empty()) {
    const Eigen::Map<const Eigen::VectorXd> r(sample.weights.data(), static_cast<Eigen::Index>(n));
    inputs["weights"] = sample.weights;
    inputs["quadraticForm"] = r.dot(s.matrix * r);
  }
  ClaimReport report = psd_report("gram.psd", std::move(inputs), lambdaMin, tolerance);
  report.wallTimeMs = clock.elapsed_ms();
  return report;
}

namespace {

constexpr double kFalsifyOffset = 0.05;
constexpr int kInitialConfigs = 8;

struct SearchState {
  int nPoints = 0;
  long evaluations = 0;
  long cap = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Point> bestPoints;
};

std::vector<Point> decode(const double* params, int nPoints) {
  std::vector<Point> pts(static_cast<std::size_t>(nPoints));
  for (int i = 0; i < nPoints; ++i) {
    pts[static_cast<std::size_t>(i)] = {kFalsifyOffset + std::exp(params[2 * i]),
                                        kFalsifyOffset + std::exp(params[2 * i + 1])};
  }
  return pts;
}

double normalized_lambda(SearchState& state, const double* params) {
  const auto pts = decode(params, state.nPoints);
  const Spectrum s = spectrum(pts);
  const double value = s.eigenvalues(0) / s.maxAbs;
  ++state.evaluations;
  if (value < state.best) {
    state.best = value;
    state.bestPoints = pts;
  }
  return value;
}

double gsl_objective(const gsl_vector* x, void* data) {
  auto* state = static_cast<SearchState*>(data);
  for (std::size_t i = 0; i < x->size; ++i) {
    if (std::abs(gsl_vector_get(x, i)) > 30.0) return std::numeric_limits<double>::max();
  }
  return normalized_lambda(*state, x->data);
}

void nelder_mead(SearchState& state, const std::vector<double>& start, long evaluationCap) {
  const std::size_t dim = start.size();
  gsl_vector* x = gsl_vector_alloc(dim);
  gsl_vector* step = gsl_vector_alloc(dim);
  for (std::size_t i = 0; i < dim; ++i) gsl_vector_set(x, i, start[i]);
  gsl_vector_set_all(step, 0.5);
  gsl_multimin_function fn{&gsl_objective, dim, &state};
  gsl_multimin_fminimizer* solver = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
  const long stop = state.evaluations + evaluationCap;
  gsl_multimin_fminimizer_set(solver, &fn, x, step);
  while (state.evaluations < stop) {
    if (gsl_multimin_fminimizer_iterate(solver) != GSL_SUCCESS) break;
    if (gsl_multimin_fminimizer_size(solver) < 1e-10) break;
  }
  gsl_multimin_fminimizer_free(solver);
  gsl_vector_free(step);
  gsl_vector_free(x);
}

}  // namespace

ClaimReport lhpd_falsify(int budget, int nPoints, std::uint64_t seed) {
  if (budget < 0) throw DomainError("falsification budget must be nonnegative");
  if (nPoints < 1 || nPoints > 64) throw DomainError("falsification needs 1 to 64 points");
  Stopwatch clock;
  gsl_error_handler_t* previous = gsl_set_error_handler_off();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coordinate(std::log(0.01), std::log(5.0));
  SearchState state;
  state.nPoints = nPoints;
  const std::size_t dim = 2 * static_cast<std::size_t>(nPoints);
  std::vector<std::pair<double, std::vector<double>>> starts;
  for (int i = 0; i < kInitialConfigs; ++i) {
    std::vector<double> params(dim);
    for (auto& p : params) p = coordinate(rng);
    const double value = normalized_lambda(state, params.data());
    starts.emplace_back(value, std::move(params));
  }
  std::stable_sort(starts.begin(), starts.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  const long initial = state.evaluations;
  const long total = initial + budget;
  const long perRestart = std::max<long>(50, budget / 4);
  int restarts = 0;
  for (std::size_t k = 0; state.evaluations < total; ++k) {
    std::vector<double> start;
    if (k < starts.size()) {
      start = starts[k].second;
    } else {
      start.resize(dim);
      for (auto& p : start) p = coordinate(rng);
    }
    nelder_mead(state, start, std::min(perRestart, total - state.evaluations));
    ++restarts;
  }
  gsl_set_error_handler(previous);

  const Spectrum s = spectrum(state.bestPoints);
  const double lambdaMin = s.eigenvalues(0);
  const double tolerance = nPoints * kEigenTolerance * s.maxAbs;
  nlohmann::json inputs{{"budget", budget},
                        {"nPoints", nPoints},
                        {"seed", seed},
                        {"evaluations", state.evaluations},
                        {"restarts", restarts},
                        {"normalizedLambdaMin", state.best},
                        {"witness", points_json(state.bestPoints)}};
  ClaimReport report = psd_report("gram.lhpd_falsify", std::move(inputs), lambdaMin, tolerance);
  report.wallTimeMs = clock.elapsed_ms();
  return report;
}

namespace {

double cm_f(double x, double y) { return 1.0 / (x * x + y * y); }

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// (-1)^{a+b} Delta_h^{(a,b)} f(x, y) together with sum |coefficient * f|.
std::pair<double, double> raw_difference(double x, double y, int a, int b, double h) {
  double sum = 0.0;
  double mass = 0.0;
  for (int i = 0; i <= a; ++i) {
    for (int k = 0; k <= b; ++k) {
      // (-1)^{a+b} (-1)^{a-i+b-k} = (-1)^{i+k}
      const double term = ((i + k) % 2 == 0 ? 1.0 : -1.0) * binomial(a, i) * binomial(b, k) *
                          cm_f(x + i * h, y + k * h);
      sum += term;
      mass += std::abs(term);
    }
  }
  return {sum, mass};
}

}  // namespace

CmDifference cm_difference(double x, double y, int a, int b, double h) {
  if (a < 0 || b < 0 || a + b < 1 || a + b > 4) throw DomainError("difference order must lie in [1, 4]");
  if (!(h > 0.0) || !(x > 0.0) || !(y > 0.0)) throw DomainError("difference needs x, y, h > 0");
  const int k = a + b;
  const auto [full, mass] = raw_difference(x, y, a, b, h);
  const auto [half, unusedMass] = raw_difference(x, y, a, b, h / 2.0);
  (void)unusedMass;
  CmDifference d;
  d.value = full / std::pow(h, k);
  d.roundoff = 4.0 * std::numeric_limits<double>::epsilon() * mass / std::pow(h, k);
  d.truncation = std::abs(d.value - half / std::pow(h / 2.0, k));
  return d;
}

ClaimReport cm_scan(const CmGrid& grid, int order, double h) {
  if (order < 1 || order > 4) throw DomainError("cm_scan order must lie in [1, 4]");
  if (grid.nx < 1 || grid.ny < 1) throw DomainError("cm_scan grid needs at least one point per axis");
  if (!(grid.x0 > 0.0 && grid.y0 > 0.0 && grid.x1 >= grid.x0 && grid.y1 >= grid.y0)) {
    throw DomainError("cm_scan grid must lie inside the open quadrant");
  }
  const double dx = grid.nx > 1 ? (grid.x1 - grid.x0) / (grid.nx - 1) : std::numeric_limits<double>::infinity();
  const double dy = grid.ny > 1 ? (grid.y1 - grid.y0) / (grid.ny - 1) : std::numeric_limits<double>::infinity();
  const double scale = std::min({dx, dy, grid.x0, grid.y0});
  if (!(h > 0.0) || order * h > 0.1 * scale) {
    throw DomainError("cm_scan step too large for the grid");
  }
  Stopwatch clock;
  constexpr double kBand = 1e-8;
  double worst = std::numeric_limits<double>::infinity();
  double worstErr = kBand;
  nlohmann::json witness = nullptr;
  nlohmann::json counts = nlohmann::json::object();
  int entries = 0;
  int negatives = 0;
  for (int ix = 0; ix < grid.nx; ++ix) {
    const double x = grid.nx > 1 ? grid.x0 + ix * dx : grid.x0;
    for (int iy = 0; iy < grid.ny; ++iy) {
      const double y = grid.ny > 1 ? grid.y0 + iy * dy : grid.y0;
      for (int k = 1; k <= order; ++k) {
        for (int a = k; a >= 0; --a) {
          const int b = k - a;
          const CmDifference d = cm_difference(x, y, a, b, h);
          ++entries;
          const double err = kBand + d.roundoff;
          if (d.value < -err) {
            ++negatives;
            const std::string key = std::to_string(a) + "," + std::to_string(b);
            counts[key] = counts.value(key, 0) + 1;
          }
          if (d.value + err < worst + worstErr) {
            worst = d.value;
            worstErr = err;
            witness = {{"x", x}, {"y", y}, {"alpha", {a, b}}, {"value", d.value},
                       {"truncation", d.truncation}, {"roundoff", d.roundoff}};
          }
        }
      }
    }
  }
  ClaimReport r;
  r.claimId = "gram.cm_scan";
  r.inputs = {{"grid", {{"x0", grid.x0}, {"x1", grid.x1}, {"y0", grid.y0}, {"y1", grid.y1},
                        {"nx", grid.nx}, {"ny", grid.ny}}},
              {"order", order},
              {"h", h},
              {"entries", entries},
              {"negativeEntries", negatives},
              {"negativeByAlpha", counts},
              {"witness", witness}};
  r.lhs = worst;
  r.rhs = 0.0;
  r.absResidual = std::max(0.0, -worst);
  r.relResidual = worst != 0.0 ? r.absResidual / std::abs(worst) : 0.0;
  r.errorEstimate = worstErr;
  r.status = classify(r.absResidual, r.errorEstimate);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

ClaimReport bernstein_rep(double r, int l, const quad::QuadSpec& spec) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("Bernstein representation needs r > 0");
  if (l < 0) throw DomainError("Bernstein representation needs l >= 0");
  Stopwatch clock;
  nlohmann::json inputs{{"r", r}, {"l", l}};
  ClaimReport report;
  if (l == 0) {
    // Formally u^{-1} e^{-ru} / Gamma(0); the density itself is not integrable.
    auto div = quad::integrate_finite([r](double u) { return std::exp(-r * u) / u; }, 0.0, 1.0, spec);
    inputs["diverged"] = div.diverged || !div.converged;
    report = equality_report("bernstein", std::move(inputs), div.value, 1.0, div.errorEstimate);
    report.status = ClaimStatus::kInconclusive;
  } else {
    const double logNorm = std::lgamma(static_cast<double>(l));
    auto f = [r, l, logNorm](double u) {
      if (u == 0.0) return l == 1 ? 1.0 : 0.0;
      return std::exp(-r * u + (l - 1) * std::log(u) - logNorm);
    };
    quad::QuadSpec marching = spec.with_transform(quad::Transform::kNone);
    marching.panelWidth = std::max(1.0, (l - 1.0 + 1.0) / r);
    auto q = quad::integrate_semi_infinite(f, 0.0, marching);
    inputs["converged"] = q.converged;
    report = equality_report("bernstein", std::move(inputs), q.value, std::pow(r, -l), q.errorEstimate);
  }
  report.wallTimeMs = clock.elapsed_ms();
  return report;
}

double moment_B2(int j) {
  if (j < 0) throw DomainError("moment index must be nonnegative");
  return quad::integrate_finite([j](double y) { return std::pow(y, 4 * j); }, 0.0, 1.0).value;
}

ClaimReport moment_B2_report(int j) {
  Stopwatch clock;
  if (j < 0) throw DomainError("moment index must be nonnegative");
  auto q = quad::integrate_finite([j](double y) { return std::pow(y, 4 * j); }, 0.0, 1.0);
  ClaimReport r = equality_report("moment.b2", {{"j", j}}, q.value, 1.0 / (4.0 * j + 1.0), q.errorEstimate);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

}  // namespace rhaudit::laplace

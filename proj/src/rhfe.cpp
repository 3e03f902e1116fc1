#include "rhaudit/rhfe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "rhaudit/errors.hpp"
#include "rhaudit/specfun.hpp"

namespace rhaudit::rhfe {

namespace {

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

double zeta_star_error(Complex zs) { return 1e-13 * std::abs(zs) + 1e-15; }

void check_strip(Complex s, const char* what) {
  require_finite(s, what);
  if (!(s.real() > 0.0 && s.real() < 1.0)) throw DomainError(std::string(what) + " needs re(s) in (0, 1)");
  if (s.imag() == 0.0) throw DomainError(std::string(what) + " needs im(s) != 0");
}

}  // namespace

quad::QuadResult<Complex> j_integral(Complex s, const quad::QuadSpec& spec) {
  require_finite(s, "J(s)");
  const Complex a = (s - 2.0) / 2.0;
  const Complex b = -(s + 1.0) / 2.0;
  auto f = [=](double x) {
    const double lx = std::log(x);
    return (std::exp(a * lx) + std::exp(b * lx)) * specfun::theta(x);
  };
  return quad::integrate_semi_infinite(f, 1.0, spec);
}

RaceResult race_check(Complex s, const quad::QuadSpec& spec) {
  if (s == Complex(0.0) || s == Complex(1.0)) throw PoleError("race identity has poles at s = 0, 1");
  RaceResult r;
  r.zetaStarDirect = specfun::zeta_star(s);
  r.polarTerm = 1.0 / (s * (s - 1.0));
  const auto j = j_integral(s, spec);
  r.jIntegral = j.value;
  r.residual = std::abs(r.zetaStarDirect - (r.polarTerm + r.jIntegral));
  r.errorEstimate = j.errorEstimate + zeta_star_error(r.zetaStarDirect);
  r.converged = j.converged;
  return r;
}

ClaimReport race_report(Complex s, const quad::QuadSpec& spec) {
  Stopwatch clock;
  const RaceResult race = race_check(s, spec);
  ClaimReport r = equality_report("race", {{"s", complex_json(s)}, {"converged", race.converged}},
                                  race.zetaStarDirect, race.polarTerm + race.jIntegral,
                                  race.errorEstimate);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

quad::QuadResult<double> im_J_direct(Complex s, const quad::QuadSpec& spec) {
  check_strip(s, "im J direct");
  const double u = s.real();
  const double v = s.imag();
  auto f = [=](double x) {
    const double lx = std::log(x);
    return 2.0 * (std::exp((u - 1.0) * lx) - std::exp(-u * lx)) * std::sin(v * lx) *
           specfun::theta(x * x);
  };
  return quad::integrate_semi_infinite(f, 1.0, spec);
}

quad::QuadResult<double> im_J_n(int n, Complex s, const quad::QuadSpec& spec) {
  check_strip(s, "im J_n");
  if (n < 1) throw DomainError("im J_n needs n >= 1");
  const double u = s.real();
  const double v = s.imag();
  const double c = kPi * n * n;
  auto f = [=](double r) {
    return (std::exp(r * u) - std::exp(r * (1.0 - u))) * std::sin(v * r) * std::exp(-c * std::exp(2.0 * r));
  };
  return quad::integrate_semi_infinite(f, 0.0, spec);
}

double newton_leibnitz(double w, double v, double N) {
  if (v == 0.0) throw DomainError("Newton-Leibnitz form needs v != 0");
  if (N < 0.0) throw DomainError("Newton-Leibnitz form needs N >= 0");
  const double d = w * w + v * v;
  return std::exp(N * w) * (w * std::sin(v * N) - v * std::cos(v * N)) / d + v / d;
}

double newton_leibnitz_periodic(double w, double v, int L) {
  if (v == 0.0) throw DomainError("Newton-Leibnitz form needs v != 0");
  return v / (v * v + w * w) * (1.0 - std::exp(2.0 * kPi * L * w / v));
}

double j_tail_bound(double u, int m, int nStart) {
  if (m <= 1) throw DomainError("tail bound needs m > 1");
  if (u > 1.0) throw DomainError("tail bound needs u <= 1");
  if (nStart < 1) throw DomainError("tail bound needs nStart >= 1");
  const double md = m;
  const double gap = md - std::max(u, 1.0 - u);
  if (!(gap > 0.0)) throw DomainError("tail bound needs m > max(u, 1-u)");
  const double gaussNorm = std::pow(md / (2.0 * kPi), md / 2.0) * std::exp(-md / 2.0);
  const double n0 = nStart;
  const double zetaTail = std::pow(n0, -md) + std::pow(n0, 1.0 - md) / (md - 1.0);
  return gaussNorm * zetaTail / gap;
}

ClaimReport decomposition_audit(int n, Complex s, int L, const traces::TraceParams& p,
                                const quad::QuadSpec& spec) {
  check_strip(s, "decomposition audit");
  Stopwatch clock;
  traces::TraceParams q = p;
  q.s = s;
  const auto lhs = im_J_n(n, s, spec);
  const auto poisson = traces::poisson_part(n, L, s, spec);
  const auto series = traces::tr_cg_n_series(n, q);
  const double tr = series.value.to_double();
  const double zt = specfun::trivial_zeta(s);
  const double paperRhs = poisson.value + zt * tr;
  const double correctedRhs = poisson.value - zt * tr;
  // Beyond N = 2 pi L / |v| the finite-N identity drops a piece bounded by
  // the integral of e^{r(1-u)} exp(-pi n^2 e^{2r}) over [N, inf).
  const double N = 2.0 * kPi * L / std::abs(s.imag());
  const double c = kPi * n * n;
  const double dropped = std::exp(N * std::max(s.real(), 1.0 - s.real()) - c * std::exp(2.0 * N)) /
                         (2.0 * c * std::exp(2.0 * N));
  const double err = lhs.errorEstimate + poisson.errorEstimate + std::abs(zt) * series.tailBound + dropped;
  nlohmann::json inputs{{"n", n},
                        {"s", complex_json(s)},
                        {"L", L},
                        {"digits", q.digits},
                        {"poissonPart", poisson.value},
                        {"trace", tr},
                        {"trivialZeta", zt},
                        {"signCorrectedRhs", correctedRhs},
                        {"signCorrectedResidual", std::abs(lhs.value - correctedRhs)},
                        {"droppedTailBound", dropped}};
  ClaimReport r = equality_report("decomposition", std::move(inputs), lhs.value, paperRhs, err);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

ClaimReport polar_sign_audit(Complex s) {
  Stopwatch clock;
  if (s == Complex(0.0) || s == Complex(1.0)) throw PoleError("polar term has poles at s = 0, 1");
  const double lhs = (1.0 / (s * (s - 1.0))).imag();
  const double t0 = 1.0 / std::norm(s * (s - 1.0));
  const double rhs = specfun::trivial_zeta(s) * t0;
  nlohmann::json inputs{{"s", complex_json(s)}, {"signCorrectedResidual", std::abs(lhs + rhs)}};
  ClaimReport r = equality_report("polar.sign", std::move(inputs), lhs, rhs, 0.0);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

ClaimReport rhfe_residual(Complex s, const traces::TraceParams& p, const quad::QuadSpec& spec,
                          bool anyRegion) {
  (void)spec;
  require_finite(s, "Rhfe argument");
  const bool inRegion = s.real() >= 0.5 && s.real() <= 1.0 && s.imag() < 0.0;
  if (!inRegion && !anyRegion) {
    throw DomainError("Rhfe is stated for re(s) in [1/2, 1], im(s) < 0");
  }
  Stopwatch clock;
  traces::TraceParams q = p;
  q.s = s;
  const Complex zs = specfun::zeta_star(s);
  const double zt = specfun::trivial_zeta(s);
  const ClaimReport total = traces::tr_cg_total(q);
  const double tr = std::get<double>(total.lhs);
  const double rhs = zt == 0.0 ? 0.0 : zt * tr;
  nlohmann::json inputs{{"s", complex_json(s)},
                        {"nMax", q.nMax},
                        {"digits", q.digits},
                        {"trivialZeta", zt},
                        {"traceTotal", tr},
                        {"traceTotalError", total.errorEstimate},
                        {"tracePositivity", to_string(total.status)},
                        {"tracePositive", tr > 0.0}};
  if (!inRegion) inputs["warn"] = "s outside re(s) in [1/2, 1], im(s) < 0";
  const double err = zeta_star_error(zs) + std::abs(zt) * total.errorEstimate;
  ClaimReport r = equality_report("rhfe", std::move(inputs), zs.imag(), rhs, err);
  r.wallTimeMs = clock.elapsed_ms();
  return r;
}

std::vector<Complex> default_grid() {
  std::vector<Complex> grid;
  for (double re : {0.55, 0.65, 0.75, 0.85, 0.95}) {
    for (double im : {-2.0, -4.0, -6.0, -8.0, -10.0}) grid.emplace_back(re, im);
  }
  return grid;
}

std::vector<ClaimReport> rhfe_sweep(const std::vector<Complex>& points, const traces::TraceParams& p,
                                    const quad::QuadSpec& spec, unsigned threads) {
  std::vector<ClaimReport> out(points.size());
  std::vector<std::exception_ptr> failures(points.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        out[i] = rhfe_residual(points[i], p, spec, true);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return out;
}

}  // namespace rhaudit::rhfe

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

#include "rhaudit/amplitude.hpp"
#include "rhaudit/errors.hpp"
#include "rhaudit/types.hpp"

namespace rhaudit::quad {

enum class Transform { kNone, kExpTail, kLogSub };
enum class OscMode { kAdaptive, kPeriodPartition };
enum class OscKind { kSin, kCos };

/// Quadrature policy shared by every engine in this module.
///
/// kNone integrates [a, inf) by marching over panels of width panelWidth,
/// kExpTail maps l = a - ln t onto (0, 1], kLogSub substitutes x = a e^r and
/// marches in r.
struct QuadSpec {
  double absTol = 1e-12;
  double relTol = 1e-10;
  int maxDepth = 40;
  Transform transform = Transform::kExpTail;
  OscMode oscMode = OscMode::kPeriodPartition;
  double panelWidth = 1.0;
  int maxPanels = 4096;

  void validate() const;
  double target(double magnitude) const { return std::max(absTol, relTol * magnitude); }
  QuadSpec scaled(double factor) const;
  QuadSpec with_transform(Transform t) const;
};

template <class T>
struct QuadResult {
  T value{};
  double errorEstimate = 0.0;
  long evaluations = 0;
  bool converged = false;
  bool diverged = false;
  double l1 = 0.0;
};

template <class T>
struct QuadrantResult : QuadResult<T> {
  bool outerConverged = false;
  bool innerConverged = false;
};

struct OscResult : QuadResult<double> {
  int lobes = 0;
  bool accelerated = false;
};

namespace detail {

struct Kronrod21 {
  static const std::array<double, 11>& abscissa();
  static const std::array<double, 11>& kronrod_weights();
  static const std::array<double, 5>& gauss_weights();
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Complex& v) { return std::abs(v); }

/// A value carried together with an absolute error bound, so that iterated
/// integration integrates the inner errors along with the inner values.
template <class T>
struct Tracked {
  T value{};
  double err = 0.0;

  Tracked& operator+=(const Tracked& o) {
    value += o.value;
    err += o.err;
    return *this;
  }
  friend Tracked operator+(Tracked a, const Tracked& b) { return a += b; }
  friend Tracked operator-(Tracked a, const Tracked& b) {
    a.value -= b.value;
    a.err += b.err;
    return a;
  }
  friend Tracked operator*(Tracked a, double w) {
    a.value *= w;
    a.err *= std::abs(w);
    return a;
  }
};

template <class T>
double magnitude(const Tracked<T>& v) {
  return magnitude(v.value);
}

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
  double l1 = 0.0;
  int depth = 0;
};

template <class T, class F>
Panel<T> apply_rule(F& f, double a, double b, int depth, long& evals) {
  const auto& x = Kronrod21::abscissa();
  const auto& wk = Kronrod21::kronrod_weights();
  const auto& wg = Kronrod21::gauss_weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kronrod = fc * wk[0];
  T gauss{};
  double l1 = magnitude(fc) * wk[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const T fp = f(c + h * x[i]);
    const T fm = f(c - h * x[i]);
    const T sum = fp + fm;
    kronrod += sum * wk[i];
    l1 += (magnitude(fp) + magnitude(fm)) * wk[i];
    if (i % 2 == 1) gauss += sum * wg[i / 2];
  }
  evals += 21;
  Panel<T> p;
  p.a = a;
  p.b = b;
  p.depth = depth;
  p.value = kronrod * h;
  p.l1 = l1 * std::abs(h);
  const double eps = std::numeric_limits<double>::epsilon();
  p.error = std::max({magnitude(kronrod - gauss) * std::abs(h), 2.0 * eps * magnitude(p.value),
                      50.0 * eps * p.l1});
  if (!std::isfinite(p.error) || !std::isfinite(p.l1)) {
    p.error = std::numeric_limits<double>::infinity();
  }
  return p;
}

/// Global adaptive Gauss-Kronrod on [a, b]: always bisects the panel with
/// the largest error estimate.
/// With openLeft the panel touching a stands for an unresolved tail (the
/// image of infinity under a map) and carries its whole value as error.
template <class T, class F>
QuadResult<T> adaptive(F&& f, double a, double b, double absTol, double relTol, int maxDepth,
                       bool openLeft = false) {
  constexpr std::size_t kMaxPanels = 20000;
  QuadResult<T> result;
  long evals = 0;
  auto by_error = [](const Panel<T>& x, const Panel<T>& y) { return x.error < y.error; };
  auto rule = [&](double lo, double hi, int depth) {
    Panel<T> p = apply_rule<T>(f, lo, hi, depth, evals);
    if (openLeft && lo == a) p.error = std::max(p.error, magnitude(p.value));
    return p;
  };
  std::vector<Panel<T>> heap;
  std::vector<Panel<T>> frozen;
  heap.push_back(rule(a, b, 0));
  T value = heap.front().value;
  double error = heap.front().error;
  double checkpoint = magnitude(value);
  int deepest = 0;
  int growth = 0;
  bool diverged = false;
  std::size_t steps = 0;
  while (!heap.empty()) {
    if (error <= std::max(absTol, relTol * magnitude(value))) break;
    if (heap.size() + frozen.size() >= kMaxPanels) break;
    std::pop_heap(heap.begin(), heap.end(), by_error);
    Panel<T> p = heap.back();
    heap.pop_back();
    if (p.depth >= maxDepth || !std::isfinite(p.error)) {
      frozen.push_back(p);
      if (!std::isfinite(p.error)) break;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    Panel<T> left = rule(p.a, mid, p.depth + 1);
    Panel<T> right = rule(mid, p.b, p.depth + 1);
    value += left.value + right.value - p.value;
    error += left.error + right.error - p.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
    if (p.depth + 1 > deepest) {
      deepest = p.depth + 1;
      if (deepest % 4 == 0) {
        const double now = magnitude(value);
        if (checkpoint > 0.0 && now > 10.0 * checkpoint) ++growth;
        checkpoint = now;
        if (growth >= 3) {
          diverged = true;
          break;
        }
      }
    }
    if (++steps % 64 == 0) {
      error = 0.0;
      for (const auto& q : heap) error += q.error;
      for (const auto& q : frozen) error += q.error;
    }
  }
  result.value = T{};
  result.errorEstimate = 0.0;
  result.l1 = 0.0;
  for (const auto* set : {&heap, &frozen}) {
    for (const auto& q : *set) {
      result.value += q.value;
      result.errorEstimate += q.error;
      result.l1 += q.l1;
    }
  }
  result.evaluations = evals;
  result.diverged = diverged;
  result.converged = !diverged && std::isfinite(result.errorEstimate) &&
                     result.errorEstimate <= std::max(absTol, relTol * magnitude(result.value));
  return result;
}

/// Sums adaptive panels [a + k w, a + (k+1) w] until the tail extrapolated from
/// the ratio of consecutive panel masses is negligible on two panels in a row,
/// or until the accumulated mass has grown tenfold across three doubling
/// checkpoints (divergence). The extrapolated tail is added to the error.
template <class T, class F>
QuadResult<T> march(F&& f, double a, double width, const QuadSpec& spec) {
  constexpr int kBlankPanels = 64;
  QuadResult<T> result;
  bool allConverged = true;
  double peak = 0.0;
  double checkpoint = 0.0;
  int nextCheckpoint = 8;
  int growth = 0;
  int quiet = 0;
  double previous = 0.0;
  double tail = 0.0;
  bool finished = false;
  for (int k = 0; k < spec.maxPanels; ++k) {
    const double lo = a + k * width;
    const double hi = lo + width;
    auto r = adaptive<T>(f, lo, hi, spec.absTol / 10.0, spec.relTol / 10.0, spec.maxDepth);
    result.value += r.value;
    result.errorEstimate += r.errorEstimate;
    result.evaluations += r.evaluations;
    result.l1 += r.l1;
    allConverged = allConverged && r.converged;
    if (r.diverged || !std::isfinite(r.l1)) {
      result.diverged = true;
      break;
    }
    peak = std::max(peak, r.l1);
    if (peak == 0.0 && k + 1 >= kBlankPanels) {
      finished = true;
      break;
    }
    if (k + 1 == nextCheckpoint) {
      if (checkpoint > 0.0 && result.l1 > 10.0 * checkpoint && ++growth >= 3) {
        result.diverged = true;
        break;
      }
      checkpoint = result.l1;
      nextCheckpoint *= 2;
    }
    const double tol = spec.target(magnitude(result.value));
    const double ratio = previous > 0.0 ? r.l1 / previous : (r.l1 == 0.0 ? 0.0 : 1.0);
    tail = ratio < 0.9 ? r.l1 * ratio / (1.0 - ratio) : r.l1 * 10.0 * (k + 1);
    previous = r.l1;
    if (tail <= tol / 10.0 && r.l1 <= 0.5 * peak) {
      if (++quiet >= 2) {
        result.errorEstimate += std::max(tail, r.l1);
        finished = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  if (!finished && !result.diverged) result.errorEstimate += tail;
  result.converged = finished && !result.diverged && allConverged &&
                     result.errorEstimate <= spec.target(magnitude(result.value));
  return result;
}

}  // namespace detail

template <class F>
using value_of = std::decay_t<std::invoke_result_t<F&, double>>;

template <class F>
auto integrate_finite(F&& f, double a, double b, const QuadSpec& spec = {})
    -> QuadResult<value_of<F>> {
  spec.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_finite needs finite a < b");
  }
  return detail::adaptive<value_of<F>>(f, a, b, spec.absTol, spec.relTol, spec.maxDepth);
}

template <class F>
auto integrate_semi_infinite(F&& f, double a, const QuadSpec& spec = {})
    -> QuadResult<value_of<F>> {
  using T = value_of<F>;
  spec.validate();
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite needs a finite endpoint");
  switch (spec.transform) {
    case Transform::kExpTail: {
      auto g = [&](double t) -> T { return f(a - std::log(t)) * (1.0 / t); };
      auto r = detail::adaptive<T>(g, 0.0, 1.0, spec.absTol, spec.relTol, spec.maxDepth, true);
      if (r.converged || r.diverged) return r;
      // Slow or oscillatory tails defeat the map; march in the original variable.
      auto m = detail::march<T>(f, a, spec.panelWidth, spec);
      m.evaluations += r.evaluations;
      return m.converged ? m : r;
    }
    case Transform::kLogSub: {
      if (!(a > 0.0)) throw DomainError("LOG_SUB transform needs a > 0");
      auto g = [&](double r) -> T {
        const double x = a * std::exp(r);
        return f(x) * x;
      };
      return detail::march<T>(g, 0.0, spec.panelWidth, spec);
    }
    case Transform::kNone:
      break;
  }
  return detail::march<T>(f, a, spec.panelWidth, spec);
}

/// Iterated integration of f2(l1, l2) over [0, inf)^2; inner errors are
/// integrated along with the inner values.
template <class F2>
auto integrate_quadrant(F2&& f2, const QuadSpec& spec = {})
    -> QuadrantResult<std::decay_t<std::invoke_result_t<F2&, double, double>>> {
  using T = std::decay_t<std::invoke_result_t<F2&, double, double>>;
  spec.validate();
  const QuadSpec inner = spec.scaled(0.1);
  bool innerOk = true;
  long innerEvals = 0;
  auto outer = [&](double l1) -> detail::Tracked<T> {
    auto r = integrate_semi_infinite([&](double l2) { return f2(l1, l2); }, 0.0, inner);
    innerOk = innerOk && r.converged;
    innerEvals += r.evaluations;
    return {r.value, r.errorEstimate};
  };
  auto r = integrate_semi_infinite(outer, 0.0, spec);
  QuadrantResult<T> out;
  out.value = r.value.value;
  out.errorEstimate = r.errorEstimate + std::abs(r.value.err);
  out.evaluations = innerEvals;
  out.diverged = r.diverged;
  out.l1 = r.l1;
  out.outerConverged = r.converged;
  out.innerConverged = innerOk;
  out.converged = r.converged && innerOk && out.errorEstimate <= spec.target(detail::magnitude(out.value));
  return out;
}

/// Integral over the quadrant of h(l1 + l2), reduced to the weighted line
/// integral of w h(w) over [0, inf).
template <class G>
auto integrate_diag_reduced(G&& g, const QuadSpec& spec = {}) -> QuadResult<value_of<G>> {
  return integrate_semi_infinite([&](double w) { return g(w) * w; }, 0.0, spec);
}

struct LobeOptions {
  double decayScale = std::numeric_limits<double>::infinity();
  bool sqrtOrigin = false;
};

/// Integral of amp(x) * osc(nu x) over [0, inf), split at the zeros of the
/// oscillator and summed as an alternating series of lobes. amp must have
/// eventually decreasing magnitude; no sign or monotonicity check is made.
OscResult integrate_lobes(const std::function<double(double)>& amp, double nu, OscKind kind,
                          const QuadSpec& spec = {}, const LobeOptions& options = {});

/// Validated front end for the amplitude families.
OscResult integrate_oscillatory(const fresnel::AmplitudeSpec& amplitude, double nu, OscKind kind,
                                const QuadSpec& spec = {});

}  // namespace rhaudit::quad

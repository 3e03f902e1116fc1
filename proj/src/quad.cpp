#include "rhaudit/quad.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rhaudit::quad {

namespace detail {

namespace {

template <std::size_t N, class Source>
std::array<double, N> copy_table(const Source& source) {
  std::array<double, N> out{};
  if (source.size() != N) throw Error("unexpected quadrature table size");
  std::copy(source.begin(), source.end(), out.begin());
  return out;
}

}  // namespace

const std::array<double, 11>& Kronrod21::abscissa() {
  static const auto table =
      copy_table<11>(boost::math::quadrature::gauss_kronrod<double, 21>::abscissa());
  return table;
}

const std::array<double, 11>& Kronrod21::kronrod_weights() {
  static const auto table =
      copy_table<11>(boost::math::quadrature::gauss_kronrod<double, 21>::weights());
  return table;
}

const std::array<double, 5>& Kronrod21::gauss_weights() {
  static const auto table = copy_table<5>(boost::math::quadrature::gauss<double, 10>::weights());
  return table;
}

}  // namespace detail

void QuadSpec::validate() const {
  auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_unit(absTol) || !in_unit(relTol)) {
    throw DomainError("QuadSpec tolerances must lie in (0, 1)");
  }
  if (maxDepth < 1 || maxDepth > 60) throw DomainError("QuadSpec maxDepth must lie in [1, 60]");
  if (!(panelWidth > 0.0) || !std::isfinite(panelWidth)) {
    throw DomainError("QuadSpec panelWidth must be positive");
  }
  if (maxPanels < 1) throw DomainError("QuadSpec maxPanels must be positive");
}

QuadSpec QuadSpec::scaled(double factor) const {
  QuadSpec out = *this;
  out.absTol = std::max(absTol * factor, 1e-300);
  out.relTol = std::max(relTol * factor, 1e-300);
  return out;
}

QuadSpec QuadSpec::with_transform(Transform t) const {
  QuadSpec out = *this;
  out.transform = t;
  return out;
}

namespace {

constexpr int kFirstAcceleration = 48;
constexpr int kMaxLobes = 4096;
constexpr int kEulerDepth = 20;

// Repeated pairwise averaging of the partial sums S[end-depth .. end].
double euler_average(const std::vector<double>& sums, std::size_t end, int depth) {
  std::vector<double> window(sums.begin() + static_cast<long>(end) - depth,
                             sums.begin() + static_cast<long>(end) + 1);
  for (int level = 0; level < depth; ++level) {
    for (std::size_t i = 0; i + 1 < window.size() - level; ++i) {
      window[i] = 0.5 * (window[i] + window[i + 1]);
    }
  }
  return window[0];
}

struct PieceSum {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

class LobeIntegrator {
 public:
  LobeIntegrator(const std::function<double(double)>& amp, double nu, OscKind kind,
                 const QuadSpec& spec, const LobeOptions& options)
      : amp_(amp), nu_(nu), kind_(kind), spec_(spec), options_(options) {}

  OscResult run() {
    const double period = kPi / nu_;
    OscResult result;
    double start = 0.0;
    double head = 0.0;
    double errors = 0.0;
    if (kind_ == OscKind::kCos) {
      start = 0.5 * period;
      PieceSum h = piece(0.0, start, true);
      head = h.value;
      errors += h.error;
      merge(result, h);
    }
    std::vector<double> sums;
    sums.reserve(kMaxLobes + 1);
    double partial = head;
    int nextCheck = kFirstAcceleration;
    const double tailTol = spec_.absTol / 10.0;
    for (int k = 0; k < kMaxLobes; ++k) {
      const double lo = start + k * period;
      PieceSum lobe = piece(lo, lo + period, kind_ == OscKind::kSin && k == 0);
      merge(result, lobe);
      errors += lobe.error;
      result.lobes = k + 1;
      if (std::abs(lobe.value) <= tailTol) {
        result.value = partial + 0.5 * lobe.value;
        result.errorEstimate = errors + 0.5 * std::abs(lobe.value);
        return finish(result);
      }
      partial += lobe.value;
      sums.push_back(partial);
      if (k + 1 == nextCheck) {
        const std::size_t end = sums.size() - 1;
        const double e0 = euler_average(sums, end, kEulerDepth);
        const double e1 = euler_average(sums, end - 1, kEulerDepth);
        const double e2 = euler_average(sums, end, kEulerDepth - 1);
        const double spread = std::max(std::abs(e0 - e1), std::abs(e0 - e2));
        result.value = e0;
        result.errorEstimate = errors + spread;
        result.accelerated = true;
        if (result.errorEstimate <= spec_.target(std::abs(e0))) return finish(result);
        nextCheck *= 2;
      }
    }
    result.converged = false;
    return result;
  }

 private:
  static void merge(OscResult& result, const PieceSum& p) {
    result.evaluations += p.evaluations;
    result.l1 += std::abs(p.value);
    if (!p.converged) result.converged = false;
  }

  OscResult finish(OscResult& result) const {
    result.converged = pieces_ok_ && result.errorEstimate <= spec_.target(std::abs(result.value));
    return result;
  }

  double integrand(double x) const {
    const double phase = nu_ * x;
    return amp_(x) * (kind_ == OscKind::kSin ? std::sin(phase) : std::cos(phase));
  }

  PieceSum adaptive(double lo, double hi) {
    auto f = [this](double x) { return integrand(x); };
    auto r = detail::adaptive<double>(f, lo, hi, spec_.absTol * 1e-2, spec_.relTol * 1e-2,
                                      spec_.maxDepth);
    pieces_ok_ = pieces_ok_ && r.converged;
    return {r.value, r.errorEstimate, r.evaluations, r.converged};
  }

  PieceSum piece(double lo, double hi, bool atOrigin) {
    if (atOrigin && options_.sqrtOrigin) {
      // x = y^2 absorbs an x^{-1/2} endpoint singularity.
      auto f = [this](double y) { return integrand(y * y) * 2.0 * y; };
      auto r = detail::adaptive<double>(f, 0.0, std::sqrt(hi), spec_.absTol * 1e-2,
                                        spec_.relTol * 1e-2, spec_.maxDepth);
      pieces_ok_ = pieces_ok_ && r.converged;
      return {r.value, r.errorEstimate, r.evaluations, r.converged};
    }
    const double scale = options_.decayScale;
    if (!(hi - lo > 4.0 * scale)) return adaptive(lo, hi);
    // Long lobe on which the amplitude decays: geometric sub-panels, cut off
    // once |amp| times the remaining length is negligible.
    PieceSum total;
    double x = lo;
    double step = scale;
    while (x < hi) {
      const double next = std::min(hi, x + step);
      PieceSum part = adaptive(x, next);
      total.value += part.value;
      total.error += part.error;
      total.evaluations += part.evaluations;
      total.converged = total.converged && part.converged;
      x = next;
      step *= 2.0;
      if (x < hi) {
        const double rest = std::abs(amp_(x)) * (hi - x);
        if (rest < spec_.absTol * 1e-3) {
          total.error += rest;
          break;
        }
      }
    }
    return total;
  }

  const std::function<double(double)>& amp_;
  double nu_;
  OscKind kind_;
  QuadSpec spec_;
  LobeOptions options_;
  bool pieces_ok_ = true;
};

}  // namespace

OscResult integrate_lobes(const std::function<double(double)>& amp, double nu, OscKind kind,
                          const QuadSpec& spec, const LobeOptions& options) {
  spec.validate();
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("oscillation frequency must be positive");
  return LobeIntegrator(amp, nu, kind, spec, options).run();
}

OscResult integrate_oscillatory(const fresnel::AmplitudeSpec& amplitude, double nu, OscKind kind,
                                const QuadSpec& spec) {
  spec.validate();
  amplitude.validate();
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("oscillation frequency must be positive");
  if (kind == OscKind::kCos && amplitude.family() == fresnel::AmplitudeFamily::kReciprocal) {
    throw DomainError("cosine integral of 1/x diverges at the origin");
  }
  const std::function<double(double)> amp = [&amplitude](double x) { return amplitude(x); };
  if (spec.oscMode == OscMode::kAdaptive) {
    if (!amplitude.is_pcid()) {
      throw DomainError("adaptive oscillatory mode needs an integrable amplitude");
    }
    const double phase_kind = kind == OscKind::kSin ? 1.0 : 0.0;
    auto f = [&](double x) {
      return amp(x) * (phase_kind > 0.0 ? std::sin(nu * x) : std::cos(nu * x));
    };
    auto r = integrate_semi_infinite(f, 0.0, spec.with_transform(Transform::kNone));
    OscResult out;
    static_cast<QuadResult<double>&>(out) = r;
    return out;
  }
  LobeOptions options;
  options.decayScale = amplitude.decay_scale();
  options.sqrtOrigin = amplitude.family() == fresnel::AmplitudeFamily::kInvSqrt;
  return integrate_lobes(amp, nu, kind, spec, options);
}

}  // namespace rhaudit::quad

#include "rhaudit/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace rhaudit::specfun {
namespace {

constexpr double kPoleGuard = 1e-6;
constexpr double kZetaMaxIm = 50.0;
constexpr double kZetaMaxRe = 4.0;
const double kLn2 = std::log(2.0);

// g = 7, n = 9 Lanczos coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

Complex gamma_right(Complex z) {
  // Valid for re(z) >= 1/2.
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

void EvalPrecision::validate() const {
  if (digits < kMinDigits || digits > kMaxDigits) {
    throw DomainError("EvalPrecision.digits must lie in [" + std::to_string(kMinDigits) +
                      ", " + std::to_string(kMaxDigits) + "]");
  }
  if (maxTerms < 1) throw DomainError("EvalPrecision.maxTerms must be >= 1");
}

Complex gamma(Complex z) {
  require_finite(z, "gamma argument");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * gamma_right(1.0 - z));
  }
  return gamma_right(z);
}

int zeta_terms(Complex s, const EvalPrecision& prec) {
  // Borwein's bound for the Chebyshev-weighted eta series:
  // |err| <= 3 (1 + 2|t|) e^{pi |t| / 2} / ((3 + sqrt 8)^n |1 - 2^{1-s}|).
  const double t = std::abs(s.imag());
  const double denom = std::abs(1.0 - std::exp((1.0 - s) * kLn2));
  const double log_target = (prec.digits + 2) * std::log(10.0) + kPi * t / 2.0 +
                            std::log(3.0 * (1.0 + 2.0 * t)) - std::log(denom);
  const int n = static_cast<int>(std::ceil(log_target / std::log(3.0 + std::sqrt(8.0))));
  return std::max(n, 8);
}

Complex zeta(Complex s, const EvalPrecision& prec) {
  prec.validate();
  require_finite(s, "zeta argument");
  if (std::abs(s - 1.0) < kPoleGuard) throw PoleError("zeta: pole at s = 1");
  if (!(s.real() > 0.0) || s.real() > kZetaMaxRe || std::abs(s.imag()) > kZetaMaxIm) {
    throw DomainError("zeta: s outside the certified region 0 < re(s) <= 4, |im(s)| <= 50");
  }
  // Zeros of 1 - 2^{1-s}: s = 1 + 2 pi i k / ln 2.
  const double period = 2.0 * kPi / kLn2;
  const double k = std::round(s.imag() / period);
  if (k != 0.0 && std::abs(s - Complex(1.0, k * period)) < kPoleGuard) {
    throw PoleError("zeta: eta-series denominator 1 - 2^{1-s} vanishes near s");
  }

  const int n = zeta_terms(s, prec);
  if (n > prec.maxTerms) {
    throw PrecisionError("zeta: needs " + std::to_string(n) + " terms, maxTerms is " +
                         std::to_string(prec.maxTerms));
  }

  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), accumulated by term ratios.
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0 / n;
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += term;
    d[static_cast<std::size_t>(i)] = n * acc;
  }
  const double dn = d[static_cast<std::size_t>(n)];

  Complex sum = 0.0;
  for (int k2 = 0; k2 < n; ++k2) {
    const double w = (d[static_cast<std::size_t>(k2)] - dn) / dn;
    const Complex power = std::exp(-s * std::log(k2 + 1.0));
    sum += (k2 % 2 == 0 ? w : -w) * power;
  }
  const Complex eta = -sum;
  return eta / (1.0 - std::exp((1.0 - s) * kLn2));
}

double theta(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("theta: x must be positive");
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double term = std::exp(-kPi * n * static_cast<double>(n) * x);
    if (n > 1 && term < std::max(1e-16 * sum, 1e-300)) break;
    sum += term;
    if (term == 0.0) break;
  }
  return sum;
}

double gauss_g(double x) { return std::exp(-kPi * x * x); }

Complex zeta_star(Complex s, const EvalPrecision& prec) {
  return std::exp(-0.5 * s * std::log(kPi)) * gamma(0.5 * s) * zeta(s, prec);
}

double trivial_zeta(Complex s) { return s.imag() * (2.0 * s.real() - 1.0); }

double series_s(double a) {
  if (!(a >= 0.0)) throw DomainError("series_s: a must be >= 0");
  if (a == 0.0) return 0.0;
  // term_m = a^m / (m! (m-1)!), term_{m+1} / term_m = a / ((m+1) m).
  double term = a;
  double sum = a;
  for (int m = 1;; ++m) {
    term *= a / ((m + 1.0) * m);
    sum += term;
    if (!std::isfinite(sum)) throw OverflowError("series_s: result exceeds the double range");
    if (term <= 1e-17 * sum && m * static_cast<double>(m + 1) > a) break;
  }
  return sum;
}

}  // namespace rhaudit::specfun

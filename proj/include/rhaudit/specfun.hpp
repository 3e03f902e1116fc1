#pragma once

// Complex special functions: Gamma, zeta through the alternating eta series,
// the completed zeta, Jacobi theta and a few helpers built on them.

#include "rhaudit/types.hpp"

namespace rhaudit::specfun {

/// Accuracy request for series-based evaluations. Everything in this module
/// runs in double precision, so `digits` is capped at kMaxDigits.
struct EvalPrecision {
  static constexpr int kMinDigits = 15;
  static constexpr int kMaxDigits = 15;

  int digits = 15;
  int maxTerms = 400;

  void validate() const;
};

/// Lanczos approximation with reflection for re(z) < 1/2.
/// Throws PoleError at z = 0, -1, -2, ...
Complex gamma(Complex z);

/// Riemann zeta for 0 < re(s) <= 4, |im(s)| <= 50 via the accelerated
/// alternating eta series.
Complex zeta(Complex s, const EvalPrecision& prec = {});

/// Number of eta-series terms zeta() uses at `s`.
int zeta_terms(Complex s, const EvalPrecision& prec = {});

/// theta(x) = sum_{n>=1} exp(-pi n^2 x), x > 0.
double theta(double x);

/// exp(-pi x^2).
double gauss_g(double x);

/// pi^{-s/2} Gamma(s/2) zeta(s).
Complex zeta_star(Complex s, const EvalPrecision& prec = {});

/// im(s) * (2 re(s) - 1); vanishes exactly on the critical line.
double trivial_zeta(Complex s);

/// sum_{m>=1} a^m / (m! (m-1)!) for a >= 0.
double series_s(double a);

}  // namespace rhaudit::specfun

#pragma once

#include <utility>

#include "rhaudit/bigreal.hpp"
#include "rhaudit/claim.hpp"
#include "rhaudit/quad.hpp"
#include "rhaudit/types.hpp"

namespace rhaudit::traces {

struct TraceParams {
  Complex s{0.75, -1.0};
  int jMax = 4000;
  int nMax = 3;
  int LMax = 5;
  int digits = 80;

  /// re(s) in [0, 1], im(s) != 0, jMax past the peak term of the largest n.
  void validate() const;
};

/// t_j(s) = (4j+1) / |(s+2j)(2j+1-s)|^2.
double trace_t(int j, Complex s);
BigReal trace_t(int j, Complex s, int digits);

/// Product form |(1/2-s)/(4j+1) + 1/2|^-2 (4j+1)^-1 |s+2j|^-2.
double trace_t_product(int j, Complex s);
ClaimReport trace_decomposition_check(int j, Complex s);

/// v (|2j+s|^-2 - |2j+1-s|^-2) and (4j+1)(1-2u) v / (|2j+s|^2 |2j+1-s|^2).
std::pair<double, double> partial_fraction_bridge(int j, Complex s);

/// (-1)^k (Delta^k t)_j >= 0 for j <= jMax, k <= kMax.
ClaimReport hausdorff_moment_audit(Complex s, int jMax, int kMax, int digits);

struct SeriesResult {
  BigReal value;
  int termsUsed = 0;
  double tailBound = 0.0;
};

/// Minimum working digits for the n-th series.
int required_digits(int n);

/// sum_j (-pi n^2)^j / j! t_j(s), summed in extended precision until a
/// certified tail bound drops below 10^(2-digits) times the largest term.
SeriesResult tr_cg_n_series(int n, const TraceParams& p);

enum class SigmaSign { kAlternating, kPositive };

/// sum_j (-+pi n^2)^j / j! |2j+z|^-2 through the sine-kernel integral
/// (1/v) int_0^inf e^{-ut} sin(vt) exp(-+pi n^2 e^{-2t}) dt.
quad::QuadResult<double> tr_cg_sigma(int n, Complex z, SigmaSign sign = SigmaSign::kAlternating,
                                     const quad::QuadSpec& spec = {});

/// zeta_t(s) tr^n(s) from the extended-precision series against
/// -v (sigma_n(s) - sigma_n(1-s)) from two sine-kernel integrals.
ClaimReport cross_path_check(int n, const TraceParams& p, const quad::QuadSpec& spec = {});

/// Envelope of the form d!/pi^d zeta-tail |z-2d|^-2 for the n > nMax part of
/// the trace sum, minimized over d.
double paper_tail_envelope(Complex s, int nMax);

/// 1/|s(s-1)|^2 + sum_{n <= nMax} tr^n(s) together with the claim that it is
/// positive. The error estimate is the magnitude of the next block tr^{nMax+1}.
ClaimReport tr_cg_total(const TraceParams& p);

/// paper_tail_envelope(s, nMax) >= |tr^{nMax+1}(s)|.
ClaimReport tail_envelope_audit(const TraceParams& p);

/// P^0_n(L, z) = e^{uN} (1/v) int_0^inf e^{-uw} sin(vw) exp(-pi n^2 e^{2N-2w}) dw
/// with N = 2 pi L / v; needs v > 0 and u > 0.
quad::QuadResult<double> poisson_term_result(int n, int L, Complex z, const quad::QuadSpec& spec = {});
double poisson_term(int n, int L, Complex z, const quad::QuadSpec& spec = {});

/// Same quantity as the quadrant integral
/// e^{uN} int int exp(-pi n^2 e^{2N - 2(l1+l2)}) e^{-(z l1 + conj(z) l2)} dl.
quad::QuadrantResult<Complex> poisson_term_quadrant(int n, int L, Complex z,
                                                    const quad::QuadSpec& spec = {});

/// One-dimensional form of P^0_n(L, z) against the quadrant integral.
ClaimReport poisson_reduction_check(int n, int L, Complex z, const quad::QuadSpec& spec = {});

/// r! e^{(2 pi / v)(u - 2r) L} / (pi^r n^{2r}) (u - 2r)^-2.
double poisson_coarse_bound(int n, int L, Complex z, int r);

/// P_n(L, s) = v (P^0(L, 1-s) - P^0(L, s)), conjugating into the upper half
/// plane when v < 0.
quad::QuadResult<double> poisson_part(int n, int L, Complex s, const quad::QuadSpec& spec = {});

/// P_n(L, s) -> 0, reported at L = LMax with the full L trend in inputs.
ClaimReport poisson_vanishing_audit(int n, Complex s, int LMax, const quad::QuadSpec& spec = {});

/// |P^0_n(L, z)| strictly decreasing for L = 1..LMax.
ClaimReport poisson_decay_audit(int n, Complex z, int LMax, const quad::QuadSpec& spec = {});

/// |P^0_n(L, z)| <= poisson_coarse_bound(n, L, z, r).
ClaimReport poisson_coarse_bound_audit(int n, int L, Complex z, int r,
                                       const quad::QuadSpec& spec = {});

}  // namespace rhaudit::traces

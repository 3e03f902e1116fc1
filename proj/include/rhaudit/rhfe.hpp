#pragma once

#include <vector>

#include "rhaudit/claim.hpp"
#include "rhaudit/quad.hpp"
#include "rhaudit/traces.hpp"
#include "rhaudit/types.hpp"

namespace rhaudit::rhfe {

struct RaceResult {
  Complex zetaStarDirect;
  Complex polarTerm;
  Complex jIntegral;
  double residual = 0.0;
  double errorEstimate = 0.0;
  bool converged = false;
};

/// J(s) = int_1^inf (x^{(s-2)/2} + x^{-(s+1)/2}) theta(x) dx.
quad::QuadResult<Complex> j_integral(Complex s, const quad::QuadSpec& spec = {});

/// zeta*(s) against 1/(s(s-1)) + J(s).
RaceResult race_check(Complex s, const quad::QuadSpec& spec = {});
ClaimReport race_report(Complex s, const quad::QuadSpec& spec = {});

/// 2 int_1^inf (x^{u-1} - x^{-u}) sin(v log x) theta(x^2) dx.
quad::QuadResult<double> im_J_direct(Complex s, const quad::QuadSpec& spec = {});

/// int_0^inf (e^{ru} - e^{r(1-u)}) sin(vr) exp(-pi n^2 e^{2r}) dr.
quad::QuadResult<double> im_J_n(int n, Complex s, const quad::QuadSpec& spec = {});

/// int_0^N e^{wr} sin(vr) dr in closed form.
double newton_leibnitz(double w, double v, double N);

/// The same integral at N = 2 pi L / v.
double newton_leibnitz_periodic(double w, double v, int L);

/// Upper bound for sum_{n >= nStart} int_1^inf |x^{u-1} - x^{-u}| G(nx) dx.
double j_tail_bound(double u, int m, int nStart);

/// Im J_n(s) = P_n(L, s) + zeta_t(s) tr^n(s). The sign-corrected form with
/// -zeta_t(s) tr^n(s) is reported alongside in inputs.
ClaimReport decomposition_audit(int n, Complex s, int L, const traces::TraceParams& p,
                                const quad::QuadSpec& spec = {});

/// Im(1/(s(s-1))) = zeta_t(s) t_0(s).
ClaimReport polar_sign_audit(Complex s);

/// im zeta*(s) = zeta_t(s) Tr_CG(s).
ClaimReport rhfe_residual(Complex s, const traces::TraceParams& p, const quad::QuadSpec& spec = {},
                          bool anyRegion = false);

/// Default grid re in {0.55, ..., 0.95} x im in {-2, ..., -10}.
std::vector<Complex> default_grid();

/// rhfe_residual over points, evaluated concurrently and returned in input
/// order.
std::vector<ClaimReport> rhfe_sweep(const std::vector<Complex>& points, const traces::TraceParams& p,
                                    const quad::QuadSpec& spec = {}, unsigned threads = 0);

}  // namespace rhaudit::rhfe

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "rhaudit/claim.hpp"
#include "rhaudit/quad.hpp"
#include "rhaudit/types.hpp"

namespace rhaudit::laplace {

/// <z, l> = z l1 + conj(z) l2.
Complex complex_form(Complex z, double l1, double l2);

/// z . l = re(z) l1 + im(z) l2.
double real_form(Complex z, double l1, double l2);

/// 1/z as the integral of e^{-zl} over [0, inf).
ClaimReport rep_inverse_z(Complex z, const quad::QuadSpec& spec = {});

/// 1/|z|^2 as the quadrant integral of e^{-<z, l>}.
ClaimReport rep_green_complex(Complex z, const quad::QuadSpec& spec = {});

struct FresnelGreenReports {
  ClaimReport direct;
  ClaimReport factored;
};

/// F22(z) = int int e^{-x(l1+l2)} cos(y(l2-l1)) dl against 1/|z|^2, both by
/// quadrature over the quadrant and through the factored cosine-transform
/// product F_c(e^{-2xu})(0) F_c(e^{-xv})(y).
FresnelGreenReports rep_green_fresnel(Complex z, const quad::QuadSpec& spec = {});

using Point = std::array<double, 2>;

struct GramSample {
  std::vector<Point> points;
  std::vector<double> weights;
  double minOffset = 1e-6;

  void validate() const;
};

/// M_ij = |z_i + z_j|^-2 with the Euclidean norm on R_+^2.
std::vector<double> gram_matrix(const std::vector<Point>& points);
double gram_lambda_min(const std::vector<Point>& points);

/// lambda_min(M) >= -n 1e-10 max|M|; the weights enter the quadratic form
/// r^T M r, reported in inputs.
ClaimReport gram_psd_check(const GramSample& sample);

/// Random restarts plus Nelder-Mead over point coordinates, minimizing
/// lambda_min(M) / max|M|. budget counts objective evaluations beyond the
/// initial random configurations.
ClaimReport lhpd_falsify(int budget, int nPoints, std::uint64_t seed = 0);

struct CmGrid {
  double x0 = 0.5;
  double x1 = 2.0;
  double y0 = 0.5;
  double y1 = 2.0;
  int nx = 4;
  int ny = 4;
};

struct CmDifference {
  double value = 0.0;       // (-1)^{a+b} Delta_h^{(a,b)} f / h^{a+b}
  double roundoff = 0.0;
  double truncation = 0.0;  // change of value when h is halved
};

/// Forward mixed difference of f(x, y) = 1/(x^2 + y^2).
CmDifference cm_difference(double x, double y, int a, int b, double h);

/// Signs of (-1)^{|alpha|} Delta^alpha f on the grid for 1 <= |alpha| <= order.
ClaimReport cm_scan(const CmGrid& grid, int order, double h = 1e-3);

/// int_0^inf e^{-ru} u^{l-1}/(l-1)! du = r^{-l}; l = 0 gives a divergence
/// report.
ClaimReport bernstein_rep(double r, int l, const quad::QuadSpec& spec = {});

/// int_0^1 y^{4j} dy by quadrature.
double moment_B2(int j);
ClaimReport moment_B2_report(int j);

}  // namespace rhaudit::laplace

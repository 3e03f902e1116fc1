#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rhaudit/errors.hpp"
#include "rhaudit/laplace_reps.hpp"

using namespace rhaudit;
using namespace rhaudit::laplace;

namespace {

Complex as_complex(const ClaimValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return {*d, 0.0};
  return std::get<Complex>(v);
}

}  // namespace

TEST(BilinearForms, RealAndImaginaryParts) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  std::uniform_real_distribution<double> l(0.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const Complex z{d(rng), d(rng)};
    const double l1 = l(rng);
    const double l2 = l(rng);
    const Complex f = complex_form(z, l1, l2);
    EXPECT_NEAR(f.real(), z.real() * (l1 + l2), 1e-12);
    EXPECT_NEAR(f.imag(), z.imag() * (l1 - l2), 1e-12);
    EXPECT_NEAR(real_form(z, l1, l2), z.real() * l1 + z.imag() * l2, 1e-12);
  }
}

TEST(InverseZ, Values) {
  const ClaimReport r = rep_inverse_z(2.0);
  EXPECT_NEAR(as_complex(r.lhs).real(), 0.5, 1e-12);
  EXPECT_NEAR(as_complex(r.rhs).real(), 0.5, 0.0);
  EXPECT_EQ(r.status, ClaimStatus::kConfirmed);
  const ClaimReport q = rep_inverse_z({1.0, 1.0});
  EXPECT_LE(std::abs(as_complex(q.lhs) - Complex(0.5, -0.5)), 1e-10);
  EXPECT_LE(rep_inverse_z({0.25, 10.0}).absResidual, 1e-8);
}

TEST(InverseZ, RejectsLeftHalfPlane) {
  EXPECT_THROW(rep_inverse_z({-1.0, 1.0}), DomainError);
  EXPECT_THROW(rep_inverse_z({0.0, 1.0}), DomainError);
}

TEST(GreenComplex, Values) {
  EXPECT_NEAR(as_complex(rep_green_complex(1.0).lhs).real(), 1.0, 1e-8);
  EXPECT_NEAR(as_complex(rep_green_complex({3.0, 4.0}).lhs).real(), 0.04, 1e-8);
  EXPECT_NEAR(as_complex(rep_green_complex({0.5, 2.0}).lhs).real(), 1.0 / 4.25, 1e-6);
}

TEST(GreenComplex, ConfirmedOnSampledPoints) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> re(0.25, 3.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (int k = 0; k < 8; ++k) {
    const Complex z{re(rng), im(rng)};
    EXPECT_TRUE(rep_inverse_z(z).confirmed()) << z;
    const ClaimReport g = rep_green_complex(z);
    EXPECT_LE(g.absResidual, 1e-6) << z;
  }
}

TEST(GreenFresnel, DirectAndFactored) {
  const auto one = rep_green_fresnel(1.0);
  EXPECT_NEAR(as_complex(one.direct.lhs).real(), 1.0, 1e-6);
  EXPECT_EQ(one.direct.status, ClaimStatus::kConfirmed);
  EXPECT_NEAR(as_complex(one.factored.lhs).real(), 0.5, 1e-9);
  EXPECT_EQ(one.factored.status, ClaimStatus::kViolated);
  EXPECT_NEAR(as_complex(rep_green_fresnel({2.0, 1.0}).direct.lhs).real(), 0.2, 1e-6);
}

TEST(Gram, SinglePoint) {
  GramSample s;
  s.points = {{1.0, 1.0}};
  s.weights = {1.0};
  const ClaimReport r = gram_psd_check(s);
  EXPECT_NEAR(std::get<double>(r.lhs), 0.125, 1e-15);
  EXPECT_EQ(r.status, ClaimStatus::kConfirmed);
}

TEST(Gram, TwoPointWitness) {
  GramSample s;
  s.points = {{1.0, 0.1}, {0.1, 1.0}};
  s.weights = {1.0, -1.0};
  const ClaimReport r = gram_psd_check(s);
  // 2 / |(2, 0.2)|^2 - 2 / |(1.1, 1.1)|^2 by hand.
  const double form = 2.0 / 4.04 - 2.0 / 2.42;
  EXPECT_NEAR(r.inputs.at("quadraticForm").get<double>(), form, 1e-14);
  EXPECT_NEAR(std::get<double>(r.lhs), 1.0 / 4.04 - 1.0 / 2.42, 1e-14);
  EXPECT_EQ(r.status, ClaimStatus::kViolated);
}

TEST(Gram, DiagonalPointsArePositiveSemidefinite) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> t(0.05, 5.0);
  GramSample s;
  for (int i = 0; i < 12; ++i) {
    const double v = t(rng);
    s.points.push_back({v, v});
    s.weights.push_back(1.0);
  }
  EXPECT_NE(gram_psd_check(s).status, ClaimStatus::kViolated);
}

TEST(Gram, SampleValidation) {
  GramSample s;
  s.points = {{1.0, 1.0}};
  s.weights = {1.0, 2.0};
  EXPECT_THROW(gram_psd_check(s), DomainError);
  s.weights = {1.0};
  s.points = {{-1.0, 1.0}};
  EXPECT_THROW(gram_psd_check(s), DomainError);
}

TEST(LhpdFalsify, DegenerateInputs) {
  const ClaimReport one = lhpd_falsify(100, 1, 0);
  EXPECT_GT(std::get<double>(one.lhs), 0.0);
  const ClaimReport zero = lhpd_falsify(0, 8, 0);
  EXPECT_TRUE(std::isfinite(std::get<double>(zero.lhs)));
  EXPECT_TRUE(zero.inputs.contains("witness"));
}

TEST(LhpdFalsify, SearchRecordsWitnessDeterministically) {
  const ClaimReport a = lhpd_falsify(2000, 8, 5);
  const ClaimReport b = lhpd_falsify(2000, 8, 5);
  EXPECT_EQ(a.inputs, b.inputs);
  EXPECT_EQ(a.status, ClaimStatus::kViolated);
  EXPECT_LT(std::get<double>(a.lhs), 0.0);
}

TEST(CmScan, SecondDerivativeSignAtOneTwo) {
  // d^2/dx^2 of 1/(x^2+y^2) is (6x^2 - 2y^2)/(x^2+y^2)^3 = -2/125 at (1, 2).
  const double symbolic = (6.0 - 8.0) / 125.0;
  const CmDifference d = cm_difference(1.0, 2.0, 2, 0, 1e-3);
  EXPECT_LT(d.value, 0.0);
  EXPECT_NEAR(d.value, symbolic, 1e-3);
  CmGrid grid{1.0, 1.0, 2.0, 2.0, 1, 1};
  const ClaimReport r = cm_scan(grid, 2);
  EXPECT_EQ(r.status, ClaimStatus::kViolated);
}

TEST(CmScan, MixedDerivativeAtOneTwo) {
  // d^2/dxdy of 1/(x^2+y^2) is 8xy/(x^2+y^2)^3 = 16/125 at (1, 2).
  const CmDifference d = cm_difference(1.0, 2.0, 1, 1, 1e-3);
  EXPECT_NEAR(d.value, 16.0 / 125.0, 1e-3);
}

TEST(CmScan, FirstOrderSignsNonnegative) {
  const ClaimReport r = cm_scan(CmGrid{}, 1);
  EXPECT_NE(r.status, ClaimStatus::kViolated);
}

TEST(CmScan, StepTooLargeRejected) {
  EXPECT_THROW(cm_scan(CmGrid{}, 4, 0.1), DomainError);
}

TEST(Bernstein, Values) {
  EXPECT_NEAR(std::get<double>(bernstein_rep(2.0, 3).lhs), 0.125, 1e-12);
  EXPECT_NEAR(std::get<double>(bernstein_rep(1.0, 1).lhs), 1.0, 1e-10);
  EXPECT_LE(bernstein_rep(5.0, 1).absResidual, 1e-10);
}

TEST(Bernstein, ZeroOrderDiverges) {
  const ClaimReport r = bernstein_rep(1.0, 0);
  EXPECT_EQ(r.status, ClaimStatus::kInconclusive);
  EXPECT_TRUE(r.inputs.at("diverged").get<bool>());
}

TEST(MomentB2, Values) {
  EXPECT_NEAR(moment_B2(0), 1.0, 1e-15);
  EXPECT_NEAR(moment_B2(1), 0.2, 1e-15);
  EXPECT_NEAR(moment_B2(10), 1.0 / 41.0, 1e-12);
  for (int j = 0; j <= 50; ++j) EXPECT_NEAR(moment_B2(j) * (4.0 * j + 1.0), 1.0, 1e-10) << j;
}

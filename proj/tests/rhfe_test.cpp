#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rhaudit/errors.hpp"
#include "rhaudit/quad.hpp"
#include "rhaudit/rhfe.hpp"
#include "rhaudit/specfun.hpp"

using namespace rhaudit;
using namespace rhaudit::rhfe;

TEST(Race, CriticalStripPoint) {
  EXPECT_LE(race_check({0.5, 2.0}).residual, 1e-8);
}

TEST(Race, RealPointTwo) {
  const RaceResult r = race_check(2.0);
  EXPECT_NEAR(r.zetaStarDirect.real(), kPi / 6.0, 1e-13);
  EXPECT_LE(r.residual, 1e-8);
}

TEST(Race, StripGrid) {
  for (double re : {0.2, 0.4, 0.6, 0.8}) {
    for (double im : {-18.0, -7.0, 1.0, 3.0, 12.0}) {
      EXPECT_LE(race_check({re, im}).residual, 1e-8) << re << " " << im;
    }
  }
}

TEST(Race, PoleRejected) {
  EXPECT_THROW(race_check(1.0), PoleError);
}

TEST(ImJ, DirectVanishesOnCriticalLine) {
  EXPECT_EQ(im_J_direct({0.5, 3.0}).value, 0.0);
  EXPECT_EQ(im_J_n(1, {0.5, 2.0}).value, 0.0);
}

TEST(ImJ, DirectMatchesRaceIntegral) {
  const Complex s{0.75, -2.0};
  EXPECT_NEAR(im_J_direct(s).value, race_check(s).jIntegral.imag(), 1e-7);
}

TEST(ImJ, ImaginaryPartOfCompletedZeta) {
  for (Complex s : {Complex{0.75, -2.0}, Complex{0.3, 4.0}, Complex{0.9, -9.0}}) {
    const RaceResult r = race_check(s);
    EXPECT_NEAR(r.zetaStarDirect.imag(), r.polarTerm.imag() + im_J_direct(s).value, 1e-7) << s;
  }
}

TEST(ImJ, HighBlocksNegligible) {
  EXPECT_LE(std::abs(im_J_n(6, {0.75, -2.0}).value), 1e-20);
}

TEST(ImJ, SeriesAgainstDirect) {
  for (Complex s : {Complex{0.75, -2.0}, Complex{0.6, 5.0}, Complex{0.2, -1.0}}) {
    for (int N : {3, 5, 20}) {
      double sum = 0.0;
      double err = 0.0;
      for (int n = 1; n <= N; ++n) {
        const auto r = im_J_n(n, s);
        sum += 2.0 * r.value;
        err += 2.0 * r.errorEstimate;
      }
      const auto direct = im_J_direct(s);
      const double bound = 2.0 * j_tail_bound(s.real(), 8, N + 1) + err + direct.errorEstimate + 1e-14;
      EXPECT_LE(std::abs(direct.value - sum), bound) << s << " N=" << N;
    }
  }
}

TEST(TailBound, DominatesComputedTail) {
  const Complex s{0.75, -2.0};
  double tail = 0.0;
  for (int n = 2; n <= 30; ++n) tail += im_J_n(n, s).value;
  EXPECT_GE(j_tail_bound(0.75, 4, 2), std::abs(tail));
}

TEST(TailBound, DecreasesInStartIndex) {
  double last = j_tail_bound(0.75, 8, 1);
  for (int n = 2; n <= 30; ++n) {
    const double b = j_tail_bound(0.75, 8, n);
    EXPECT_LT(b, last);
    last = b;
  }
  EXPECT_LE(j_tail_bound(0.75, 8, 20), 1.1e-12);
  EXPECT_THROW(j_tail_bound(0.75, 1, 2), DomainError);
}

TEST(NewtonLeibnitz, Values) {
  EXPECT_NEAR(newton_leibnitz(0.0, 1.0, kPi), 2.0, 1e-15);
  auto f = [](double r) { return std::exp(r) * std::sin(r); };
  EXPECT_NEAR(newton_leibnitz(1.0, 1.0, 1.0), quad::integrate_finite(f, 0.0, 1.0).value, 1e-10);
  EXPECT_NEAR(newton_leibnitz_periodic(-1.0, 2.0, 3), newton_leibnitz(-1.0, 2.0, 3.0 * kPi), 1e-15);
}

TEST(NewtonLeibnitz, RandomQuadratureAgreement) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  std::uniform_real_distribution<double> v(-5.0, 5.0);
  std::uniform_real_distribution<double> N(0.05, 3.0);
  quad::QuadSpec tight;
  tight.absTol = 1e-14;
  tight.relTol = 1e-13;
  for (int k = 0; k < 100; ++k) {
    const double ww = w(rng);
    const double vv = v(rng);
    const double nn = N(rng);
    auto f = [=](double r) { return std::exp(ww * r) * std::sin(vv * r); };
    EXPECT_NEAR(newton_leibnitz(ww, vv, nn), quad::integrate_finite(f, 0.0, nn, tight).value, 1e-9);
  }
}

TEST(Decomposition, CriticalLineBothSidesZero) {
  traces::TraceParams p;
  const ClaimReport r = decomposition_audit(1, {0.5, -3.0}, 2, p);
  EXPECT_NEAR(std::get<double>(r.lhs), 0.0, 1e-15);
  EXPECT_NEAR(std::get<double>(r.rhs), 0.0, 1e-15);
}

TEST(Decomposition, ResidualsRecorded) {
  traces::TraceParams p;
  p.digits = 50;
  const ClaimReport a = decomposition_audit(1, {0.75, -2.0}, 5, p);
  EXPECT_TRUE(std::isfinite(a.absResidual));
  EXPECT_TRUE(a.inputs.contains("signCorrectedResidual"));
  const ClaimReport b = decomposition_audit(2, {0.6, -3.0}, 3, p);
  EXPECT_TRUE(std::isfinite(b.errorEstimate));
}

TEST(PolarSign, ReportedWithExactRhs) {
  const Complex s{0.75, -2.0};
  const ClaimReport r = polar_sign_audit(s);
  const Complex polar = 1.0 / (s * (s - 1.0));
  EXPECT_NEAR(std::get<double>(r.lhs), polar.imag(), 1e-15);
  EXPECT_NEAR(std::get<double>(r.rhs), specfun::trivial_zeta(s) * traces::trace_t(0, s), 1e-15);
}

TEST(Rhfe, CriticalLineConfirmed) {
  const ClaimReport r = rhfe_residual({0.5, -5.0}, traces::TraceParams{});
  EXPECT_EQ(r.status, ClaimStatus::kConfirmed);
  EXPECT_LE(std::abs(std::get<double>(r.lhs)), 1e-9);
  EXPECT_LE(std::abs(std::get<double>(r.rhs)), 1e-9);
}

TEST(Rhfe, RegionGuard) {
  EXPECT_THROW(rhfe_residual({0.3, -2.0}, traces::TraceParams{}), DomainError);
  const ClaimReport r = rhfe_residual({0.3, -2.0}, traces::TraceParams{}, {}, true);
  EXPECT_TRUE(r.inputs.contains("warn"));
}

TEST(Rhfe, SweepKeepsGridOrder) {
  const auto grid = default_grid();
  ASSERT_EQ(grid.size(), 25u);
  const auto reports = rhfe_sweep(grid, traces::TraceParams{}, {}, 4);
  ASSERT_EQ(reports.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(reports[i].inputs.at("s").at("re").get<double>(), grid[i].real());
    EXPECT_EQ(reports[i].inputs.at("s").at("im").get<double>(), grid[i].imag());
    EXPECT_TRUE(std::isfinite(reports[i].absResidual));
  }
  const auto serial = rhfe_sweep(grid, traces::TraceParams{}, {}, 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(serial[i].absResidual, reports[i].absResidual);
  }
}

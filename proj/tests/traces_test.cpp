#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rhaudit/bigreal.hpp"
#include "rhaudit/errors.hpp"
#include "rhaudit/quad.hpp"
#include "rhaudit/specfun.hpp"
#include "rhaudit/traces.hpp"

using namespace rhaudit;
using namespace rhaudit::traces;

namespace {

TraceParams params(Complex s, int digits = 80) {
  TraceParams p;
  p.s = s;
  p.digits = digits;
  return p;
}

}  // namespace

TEST(TraceT, Values) {
  EXPECT_NEAR(trace_t(0, {0.5, 1.0}), 0.64, 1e-15);
  EXPECT_NEAR(trace_t(0, 0.5), 16.0, 1e-14);
  EXPECT_NEAR(trace_t(3, {0.75, -1.0}), trace_t_product(3, {0.75, -1.0}), 1e-12);
  EXPECT_THROW(trace_t(-1, 0.5), DomainError);
  EXPECT_THROW(trace_t(0, 0.0), PoleError);
}

TEST(TraceT, ExtendedPrecisionMatchesDouble) {
  for (int j : {0, 1, 7, 40}) {
    const Complex s{0.6, -2.0};
    EXPECT_NEAR(trace_t(j, s, 50).to_double(), trace_t(j, s), 1e-15 * trace_t(j, s));
  }
}

TEST(Decomposition, Examples) {
  EXPECT_LE(trace_decomposition_check(0, {0.5, 1.0}).absResidual, 1e-12);
  EXPECT_LE(trace_decomposition_check(5, {0.3, 2.0}).absResidual, 1e-12);
  EXPECT_LE(trace_decomposition_check(50, {0.9, -7.0}).absResidual, 1e-11);
}

TEST(Decomposition, RandomStrip) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> j(0, 100);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> v(-30.0, 30.0);
  for (int k = 0; k < 500; ++k) {
    const Complex s{u(rng), v(rng)};
    const int jj = j(rng);
    EXPECT_LE(trace_decomposition_check(jj, s).absResidual, 1e-11) << jj << " " << s;
  }
}

TEST(Bridge, Termwise) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> v(-20.0, 20.0);
  for (int k = 0; k < 50; ++k) {
    const Complex s{u(rng), v(rng)};
    for (int j = 0; j <= 100; ++j) {
      const auto [lhs, rhs] = partial_fraction_bridge(j, s);
      EXPECT_LE(std::abs(lhs - rhs), 1e-12) << j << " " << s;
    }
  }
}

TEST(Hausdorff, ZeroOrderRowPositive) {
  const ClaimReport r = hausdorff_moment_audit({0.75, -0.5}, 30, 0, 40);
  EXPECT_EQ(r.status, ClaimStatus::kConfirmed);
}

TEST(Hausdorff, FirstDifferenceSign) {
  const Complex s{0.75, -0.5};
  const ClaimReport r = hausdorff_moment_audit(s, 0, 1, 40);
  const double diff = trace_t(0, s) - trace_t(1, s);
  EXPECT_EQ(r.status == ClaimStatus::kConfirmed, diff > 0.0);
}

TEST(Hausdorff, FullAuditRecorded) {
  const ClaimReport r = hausdorff_moment_audit({0.75, -0.5}, 20, 20, 60);
  EXPECT_EQ(r.claimId, "trace.hausdorff");
  EXPECT_TRUE(std::isfinite(r.absResidual));
  EXPECT_TRUE(std::isfinite(r.errorEstimate));
}

TEST(Hausdorff, OutsideRegionFlagged) {
  const ClaimReport r = hausdorff_moment_audit({0.3, 1.0}, 5, 5, 40);
  EXPECT_TRUE(r.inputs.contains("warn"));
}

TEST(RequiredDigits, GrowsWithPeakTerm) {
  EXPECT_EQ(required_digits(1), 17);
  EXPECT_GE(required_digits(3), 28);
  EXPECT_LT(required_digits(1), required_digits(2));
}

TEST(Series, CrossPathAtFiftyDigits) {
  const ClaimReport r = cross_path_check(1, params({0.75, -1.0}, 50));
  EXPECT_LE(r.absResidual, 1e-8);
}

TEST(Series, CrossPathStripGrid) {
  for (Complex s : {Complex{0.55, -1.5}, Complex{0.7, -3.0}, Complex{0.95, -6.0}, Complex{0.3, 2.0}}) {
    for (int n = 1; n <= 3; ++n) {
      EXPECT_LE(cross_path_check(n, params(s)).absResidual, 1e-8) << n << " " << s;
    }
  }
}

TEST(Series, TruncationGuards) {
  TraceParams p = params({0.75, -1.0});
  p.jMax = 10;
  EXPECT_THROW(tr_cg_n_series(1, p), PrecisionError);
  p = params({0.75, -1.0}, 20);
  EXPECT_THROW(tr_cg_n_series(3, p), PrecisionError);
}

TEST(Series, StableUnderLargerCap) {
  TraceParams p = params({0.75, -1.0}, 60);
  const SeriesResult a = tr_cg_n_series(2, p);
  p.jMax += 20;
  const SeriesResult b = tr_cg_n_series(2, p);
  EXPECT_LE(std::abs((a.value - b.value).to_double()), std::pow(10.0, -60 + 4) * std::abs(a.value.to_double()));
  EXPECT_LE(a.termsUsed, 4000);
}

TEST(Sigma, LaplaceOfSineSanity) {
  auto f = [](double t) { return std::exp(-t) * std::sin(2.0 * t); };
  const auto r = quad::integrate_semi_infinite(f, 0.0);
  EXPECT_NEAR(r.value, 0.4, 1e-10);
  EXPECT_NEAR(r.value / 2.0, 0.2, 1e-10);
}

TEST(Sigma, SeriesOracle) {
  // Direct double sum of (-pi n^2)^j / j! |2j+z|^-2 is fine for n = 1.
  const Complex z{0.6, -2.0};
  double sum = 0.0;
  double coef = 1.0;
  for (int j = 0; j < 80; ++j) {
    sum += coef / std::norm(2.0 * j + z);
    coef *= -kPi / (j + 1.0);
  }
  const auto r = tr_cg_sigma(1, z);
  EXPECT_NEAR(r.value, sum, 1e-10);
  const auto q = tr_cg_sigma(2, z, SigmaSign::kAlternating);
  EXPECT_LE(q.errorEstimate, 1e-9);
}

TEST(Total, NoBlocksIsPolarTerm) {
  TraceParams p = params({0.75, -1.0});
  p.nMax = 0;
  const ClaimReport r = tr_cg_total(p);
  const Complex s = p.s;
  EXPECT_NEAR(std::get<double>(r.lhs), 1.0 / std::norm(s * (s - 1.0)), 1e-14);
}

TEST(Total, RecordsNextBlockAsError) {
  const ClaimReport r = tr_cg_total(params({0.75, -1.0}));
  EXPECT_TRUE(std::isfinite(std::get<double>(r.lhs)));
  EXPECT_GT(r.errorEstimate, 0.0);
}

TEST(TailEnvelope, ComparedWithNextBlock) {
  const ClaimReport r = tail_envelope_audit(params({0.75, -1.0}));
  EXPECT_TRUE(std::isfinite(r.absResidual));
  EXPECT_EQ(r.status, ClaimStatus::kViolated);
}

TEST(Poisson, ReductionAgainstQuadrant) {
  for (int L : {0, 1}) {
    const ClaimReport r = poisson_reduction_check(1, L, {0.75, 2.0});
    EXPECT_LE(r.absResidual, 1e-6) << L;
  }
}

TEST(Poisson, ArgumentGuards) {
  EXPECT_THROW(poisson_term(0, 1, {0.75, 2.0}), DomainError);
  EXPECT_THROW(poisson_term(1, -1, {0.75, 2.0}), DomainError);
  EXPECT_THROW(poisson_term(1, 1, {0.75, -2.0}), DomainError);
}

TEST(Poisson, PartVanishesOnCriticalLine) {
  EXPECT_NEAR(poisson_part(1, 2, {0.5, -3.0}).value, 0.0, 1e-15);
}

TEST(Poisson, DecayAuditRecordsTrend) {
  const ClaimReport r = poisson_decay_audit(1, {0.75, 2.0}, 5);
  EXPECT_EQ(r.inputs.at("trend").size(), 5u);
  EXPECT_TRUE(std::isfinite(r.absResidual));
  EXPECT_NE(r.status, ClaimStatus::kConfirmed);
}

TEST(Poisson, VanishingAndCoarseBoundReported) {
  const ClaimReport v = poisson_vanishing_audit(1, {0.75, -2.0}, 5);
  EXPECT_EQ(v.inputs.at("trend").size(), 6u);
  const ClaimReport c = poisson_coarse_bound_audit(1, 1, {0.75, 2.0}, 1);
  EXPECT_TRUE(std::isfinite(c.absResidual));
}

#include <gtest/gtest.h>

#include <cmath>

#include "rhaudit/amplitude.hpp"
#include "rhaudit/errors.hpp"
#include "rhaudit/fresnel.hpp"

using namespace rhaudit;
using namespace rhaudit::fresnel;

TEST(Amplitude, FactoriesValidateParameters) {
  EXPECT_THROW(AmplitudeSpec::exp(0.0), DomainError);
  EXPECT_THROW(AmplitudeSpec::gauss(-1.0), DomainError);
  EXPECT_THROW(AmplitudeSpec::rational(1.0), DomainError);
  EXPECT_THROW(AmplitudeSpec(AmplitudeFamily::kExp, {}), AmplitudeError);
  EXPECT_THROW(AmplitudeSpec(AmplitudeFamily::kExp, {-1.0}).validate(), AmplitudeError);
  EXPECT_THROW(AmplitudeSpec(AmplitudeFamily::kRational, {0.5}).validate(), AmplitudeError);
}

TEST(Amplitude, PcidFlags) {
  EXPECT_TRUE(AmplitudeSpec::exp(1.0).is_pcid());
  EXPECT_TRUE(AmplitudeSpec::gauss(2.0).is_pcid());
  EXPECT_TRUE(AmplitudeSpec::rational(2.0).is_pcid());
  EXPECT_FALSE(AmplitudeSpec::reciprocal().is_pcid());
  EXPECT_FALSE(AmplitudeSpec::inv_sqrt().is_pcid());
  EXPECT_TRUE(std::isinf(AmplitudeSpec::reciprocal().integral()));
}

TEST(Amplitude, IntegralsAndDerivatives) {
  EXPECT_NEAR(AmplitudeSpec::exp(2.0).integral(), 0.5, 1e-15);
  EXPECT_NEAR(AmplitudeSpec::gauss(kPi).integral(), 0.5, 1e-15);
  EXPECT_NEAR(AmplitudeSpec::rational(3.0).integral(), 0.5, 1e-15);
  const auto a = AmplitudeSpec::rational(2.5);
  const double x = 1.3;
  const double h = 1e-6;
  EXPECT_NEAR(a.derivative(x), (a(x + h) - a(x - h)) / (2.0 * h), 1e-8);
}

TEST(FresnelSin, Values) {
  EXPECT_NEAR(fresnel_sin(AmplitudeSpec::exp(1.0), 1.0), 0.5, 1e-10);
  EXPECT_NEAR(fresnel_sin(AmplitudeSpec::reciprocal(), 3.0), kPi / 2.0, 1e-6);
}

TEST(FresnelSin, ModesAgreeOnGaussian) {
  const auto amp = AmplitudeSpec::gauss(1.0);
  quad::QuadSpec adaptive;
  adaptive.oscMode = quad::OscMode::kAdaptive;
  const double partition = fresnel_sin(amp, 1.0);
  EXPECT_GT(partition, 0.0);
  EXPECT_NEAR(partition, fresnel_sin(amp, 1.0, adaptive), 1e-8);
}

TEST(FresnelCos, Values) {
  EXPECT_NEAR(fresnel_cos(AmplitudeSpec::exp(1.0), 2.0), 0.2, 1e-10);
  EXPECT_NEAR(fresnel_cos(AmplitudeSpec::gauss(kPi), 1e-6), 0.5, 1e-5);
}

TEST(FresnelCos, ExpClosedFormGrid) {
  for (double a : {0.3, 1.0, 4.0}) {
    for (double nu : {0.1, 1.0, 7.0, 40.0}) {
      const auto amp = AmplitudeSpec::exp(a);
      const double d = a * a + nu * nu;
      EXPECT_LE(std::abs(fresnel_sin(amp, nu) - nu / d), 1e-9) << a << " " << nu;
      EXPECT_LE(std::abs(fresnel_cos(amp, nu) - a / d), 1e-9) << a << " " << nu;
    }
  }
}

TEST(FresnelClassic, Values) {
  EXPECT_NEAR(fresnel_classic(1.0), 0.6266570686577501, 1e-6);
  EXPECT_NEAR(fresnel_classic(kPi / 2.0), 0.5, 1e-6);
}

TEST(PowerAmplitude, ReciprocalAndHalfPower) {
  for (double nu : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(power_amplitude_value(1.0, nu).value, kPi / 2.0, 1e-6);
    EXPECT_NEAR(power_amplitude_value(0.5, nu).value, std::sqrt(kPi / (2.0 * nu)), 1e-6);
  }
  EXPECT_THROW(power_amplitude_value(0.7, 1.0), DomainError);
}

TEST(DerivativeIdentity, Families) {
  for (const auto& amp : {AmplitudeSpec::exp(1.0), AmplitudeSpec::gauss(0.5), AmplitudeSpec::rational(2.0)}) {
    for (double nu : {0.5, 2.0}) {
      const ClaimReport r = derivative_identity_check(amp, nu);
      EXPECT_LE(r.absResidual, 1e-7) << amp.describe() << " " << nu;
      EXPECT_EQ(r.claimId, "fresnel.derivative_identity");
    }
  }
}

TEST(LemmaPositivity, SingleExpSample) {
  const auto r = fresnel_sin_result(AmplitudeSpec::exp(1.0), 1.0);
  EXPECT_GT(r.value, r.errorEstimate);
}

TEST(LemmaPositivity, ExpFamilyConfirmed) {
  const ClaimReport r = lemma_positivity_audit(100, 1, AmplitudeFamily::kExp);
  EXPECT_EQ(r.status, ClaimStatus::kConfirmed);
  EXPECT_EQ(r.inputs.at("samples"), 100);
}

TEST(LemmaPositivity, RationalFamilyConfirmed) {
  EXPECT_EQ(lemma_positivity_audit(50, 2, AmplitudeFamily::kRational).status, ClaimStatus::kConfirmed);
}

TEST(LemmaPositivity, MixedFamiliesConfirmedAndDeterministic) {
  const ClaimReport a = lemma_positivity_audit(200, 0);
  const ClaimReport b = lemma_positivity_audit(200, 0);
  EXPECT_EQ(a.status, ClaimStatus::kConfirmed);
  EXPECT_EQ(a.inputs, b.inputs);
  EXPECT_EQ(std::get<double>(a.lhs), std::get<double>(b.lhs));
}

TEST(LemmaPositivity, NonIntegrableFamilyRejected) {
  EXPECT_THROW(lemma_positivity_audit(10, 0, AmplitudeFamily::kReciprocal), DomainError);
}

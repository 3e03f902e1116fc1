#pragma once

#include <cstdint>
#include <optional>

#include "rhaudit/amplitude.hpp"
#include "rhaudit/claim.hpp"
#include "rhaudit/quad.hpp"

namespace rhaudit::fresnel {

/// F_s(A, nu) = integral of A(x) sin(nu x) over [0, inf).
quad::OscResult fresnel_sin_result(const AmplitudeSpec& a, double nu, const quad::QuadSpec& spec = {});
double fresnel_sin(const AmplitudeSpec& a, double nu, const quad::QuadSpec& spec = {});

/// F_c(A, nu) = integral of A(x) cos(nu x) over [0, inf).
quad::OscResult fresnel_cos_result(const AmplitudeSpec& a, double nu, const quad::QuadSpec& spec = {});
double fresnel_cos(const AmplitudeSpec& a, double nu, const quad::QuadSpec& spec = {});

/// Sine integral of the derivative A'; A' is negative, so this is the raw
/// lobe sum without any positivity expectations.
quad::OscResult fresnel_sin_derivative(const AmplitudeSpec& a, double nu,
                                       const quad::QuadSpec& spec = {});

/// Integral of sin(nu x^2) over [0, inf), computed as the sine integral of
/// t^{-1/2} / 2.
quad::OscResult fresnel_classic_result(double nu, const quad::QuadSpec& spec = {});
double fresnel_classic(double nu, const quad::QuadSpec& spec = {});

/// F(r, nu) for the power amplitudes x^{-r}: r = 1 uses the sine kernel
/// (value pi/2), r = 1/2 the cosine kernel (value sqrt(pi/(2 nu))).
quad::OscResult power_amplitude_value(double r, double nu, const quad::QuadSpec& spec = {});

/// F_c(A, nu) against -(1/nu) F_s(A', nu).
ClaimReport derivative_identity_check(const AmplitudeSpec& a, double nu,
                                      const quad::QuadSpec& spec = {});

/// F_s(A, nu) > 0 over random integrable decreasing amplitudes. When family
/// is set, only that family is sampled.
ClaimReport lemma_positivity_audit(int samples, std::uint64_t seed = 0,
                                   std::optional<AmplitudeFamily> family = std::nullopt,
                                   const quad::QuadSpec& spec = {});

}  // namespace rhaudit::fresnel

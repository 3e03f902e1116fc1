#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "rhaudit/errors.hpp"

namespace rhaudit {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(double x, std::string_view what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

inline void require_finite(Complex z, std::string_view what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + " must be finite");
}

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace rhaudit

#pragma once

#include <stdexcept>
#include <string>

namespace rhaudit {

// Base of every error raised by the library. Claim disagreements are never
// errors; they are reported through ClaimReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument sits on (or within the guard radius of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the supported or certified region.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Working precision or truncation length cannot deliver the requested accuracy.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Result does not fit in the floating range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Amplitude descriptor violates the positive/decreasing requirements.
class AmplitudeError : public Error {
 public:
  using Error::Error;
};

}  // namespace rhaudit

#include "rhaudit/bigreal.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "rhaudit/errors.hpp"

namespace rhaudit {

namespace {

void check_digits(int digits) {
  if (digits < BigReal::kMinDigits || digits > BigReal::kMaxDigits) {
    throw PrecisionError("working precision must lie in [" + std::to_string(BigReal::kMinDigits) +
                         ", " + std::to_string(BigReal::kMaxDigits) + "] digits");
  }
}

}  // namespace

mpfr_prec_t BigReal::bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * std::log2(10.0))) + 8;
}

BigReal::BigReal(int digits) : digits_(digits) {
  check_digits(digits);
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double x, int digits) : BigReal(digits) {
  if (!std::isfinite(x)) {
    mpfr_clear(value_);
    throw DomainError("BigReal from non-finite double");
  }
  mpfr_set_d(value_, x, MPFR_RNDN);
}

BigReal::BigReal(long x, int digits) : BigReal(digits) { mpfr_set_si(value_, x, MPFR_RNDN); }

BigReal BigReal::from_string(const std::string& text, int digits) {
  BigReal out(digits);
  if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("BigReal cannot parse '" + text + "'");
  }
  return out;
}

BigReal BigReal::pi(int digits) {
  BigReal out(digits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : BigReal(other) {}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_), std::swap(digits_, other.digits_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

mpfr_prec_t BigReal::precision() const { return mpfr_get_prec(value_); }

void BigReal::widen_to(mpfr_prec_t bits, int digits) {
  if (bits > mpfr_get_prec(value_)) {
    mpfr_prec_round(value_, bits, MPFR_RNDN);
    digits_ = digits;
  }
}

BigReal& BigReal::operator+=(const BigReal& o) {
  widen_to(o.precision(), o.digits_);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  widen_to(o.precision(), o.digits_);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  widen_to(o.precision(), o.digits_);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.is_zero()) throw DomainError("BigReal division by zero");
  widen_to(o.precision(), o.digits_);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(double o) {
  mpfr_mul_d(value_, value_, o, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(double o) {
  if (o == 0.0) throw DomainError("BigReal division by zero");
  mpfr_div_d(value_, value_, o, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

BigReal abs(const BigReal& x) {
  BigReal out(x);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("BigReal sqrt of a negative value");
  BigReal out(x);
  mpfr_sqrt(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x);
  mpfr_exp(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("BigReal log of a non-positive value");
  BigReal out(x);
  mpfr_log(out.value_, out.value_, MPFR_RNDN);
  return out;
}

int BigReal::sign() const { return mpfr_sgn(value_); }

double BigReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigReal::to_string(int significant) const {
  const int n = significant > 0 ? significant : digits_;
  std::vector<char> buffer(static_cast<std::size_t>(n) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", n, value_);
  return buffer.data();
}

}  // namespace rhaudit

#pragma once

#include <mpfr.h>

#include <string>

namespace rhaudit {

/// Extended-precision real with an explicit, per-value working precision in
/// decimal digits. Binary results carry the larger operand precision.
class BigReal {
 public:
  static constexpr int kMinDigits = 15;
  static constexpr int kMaxDigits = 200;

  static mpfr_prec_t bits_for_digits(int digits);

  explicit BigReal(int digits = 50);
  BigReal(double x, int digits);
  BigReal(long x, int digits);
  static BigReal from_string(const std::string& text, int digits);
  static BigReal pi(int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const { return digits_; }
  mpfr_prec_t precision() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(double o);
  BigReal& operator/=(double o);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, double b) { return a *= b; }
  friend BigReal operator/(BigReal a, double b) { return a /= b; }
  BigReal operator-() const;

  friend bool operator<(const BigReal& a, const BigReal& b);
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return !(b < a); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return !(a < b); }
  friend bool operator==(const BigReal& a, const BigReal& b);

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal log(const BigReal& x);

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  double to_double() const;
  std::string to_string(int significant = 0) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  void widen_to(mpfr_prec_t bits, int digits);

  mpfr_t value_;
  int digits_;
};

}  // namespace rhaudit

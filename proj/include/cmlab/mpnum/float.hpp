#pragma once

// Thin value-semantic wrappers over MPFR. Every result carries the larger of
// its operands' precisions; rounding is always to nearest.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

namespace cmlab::mpnum {

/// Bits needed for `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

class Float {
 public:
  explicit Float(mpfr_prec_t bits = 128);
  Float(double x, mpfr_prec_t bits);
  Float(long x, mpfr_prec_t bits);
  Float(const mpq_class& q, mpfr_prec_t bits);
  Float(const std::string& decimal, mpfr_prec_t bits);

  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

  /// Same value rounded to a different precision.
  Float with_prec(mpfr_prec_t bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string str(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x|/2^e < 1; large negative for zero.
  long exponent() const;
  /// Nearest integer (ties away from zero).
  long round_long() const { return mpfr_get_si(value_, MPFR_RNDNA); }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }

  Float operator-() const;
  Float& operator+=(const Float& o);
  Float& operator-=(const Float& o);
  Float& operator*=(const Float& o);
  Float& operator/=(const Float& o);
  Float& operator*=(long o);
  Float& operator/=(long o);

  friend Float operator+(Float a, const Float& b) { return a += b; }
  friend Float operator-(Float a, const Float& b) { return a -= b; }
  friend Float operator*(Float a, const Float& b) { return a *= b; }
  friend Float operator/(Float a, const Float& b) { return a /= b; }
  friend Float operator*(Float a, long b) { return a *= b; }
  friend Float operator/(Float a, long b) { return a /= b; }
  // A double would otherwise be truncated through the long overloads.
  Float& operator*=(double) = delete;
  Float& operator/=(double) = delete;
  friend Float operator*(Float, double) = delete;
  friend Float operator/(Float, double) = delete;
  friend Float operator*(double, Float) = delete;

  friend bool operator==(const Float& a, const Float& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Float& a, const Float& b);

 private:
  mpfr_t value_;
};

Float abs(const Float& x);
Float sqrt(const Float& x);
Float exp(const Float& x);
Float log(const Float& x);
Float sin(const Float& x);
Float cos(const Float& x);
Float atan2(const Float& y, const Float& x);
Float pow(const Float& x, const Float& y);
Float pow(const Float& x, long n);
Float ldexp(const Float& x, long e);
Float max(const Float& a, const Float& b);
Float const_pi(mpfr_prec_t bits);
Float const_euler(mpfr_prec_t bits);
Float const_log2(mpfr_prec_t bits);

/// Unit in the last place of x at its own precision (2^(exp - prec)).
double ulp(const Float& x);

/// Complex number with Float components; the principal branch is used for
/// sqrt and log (cut along the negative real axis).
struct Complex {
  Float re;
  Float im;

  explicit Complex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
  Complex(Float r, Float i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Float& r) : re(r), im(0L, r.prec()) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Float& o);
  Complex& operator/=(const Float& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Float& b) { return a *= b; }
  friend Complex operator/(Complex a, const Float& b) { return a /= b; }
};

Float abs(const Complex& z);
Float arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sin(const Complex& z);
/// exp(i*theta).
Complex expi(const Float& theta);

}  // namespace cmlab::mpnum

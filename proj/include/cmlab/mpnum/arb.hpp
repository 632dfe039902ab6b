#pragma once

#include "cmlab/mpnum/float.hpp"

#include <string>

namespace cmlab::mpnum {

/// Precision request shared by all analytic routines.
struct PrecisionContext {
  int digits = 30;         ///< requested decimal digits
  int guard = 10;          ///< extra working digits
  long max_terms = 100000; ///< cap on any series length or iteration count

  mpfr_prec_t bits() const { return bits_for_digits(digits + guard); }
  /// 10^-digits, the relative target for results.
  double target() const;
  /// Same context with the requested digits raised by `extra`.
  PrecisionContext raised(int extra) const;
};

/// Real value with a conservative absolute error estimate. The estimate is
/// propagated first-order through arithmetic and always includes rounding.
struct ArbReal {
  Float value;
  double err = 0.0;

  ArbReal() = default;
  explicit ArbReal(Float v, double e = 0.0);
  static ArbReal exact(long n, mpfr_prec_t bits) { return ArbReal(Float(n, bits), 0.0); }
  static ArbReal from_rational(const mpq_class& q, mpfr_prec_t bits);

  double to_double() const { return value.to_double(); }
  std::string str(int digits) const { return value.str(digits); }

  ArbReal operator-() const { return ArbReal(-value, err); }
  friend ArbReal operator+(const ArbReal& a, const ArbReal& b);
  friend ArbReal operator-(const ArbReal& a, const ArbReal& b);
  friend ArbReal operator*(const ArbReal& a, const ArbReal& b);
  friend ArbReal operator/(const ArbReal& a, const ArbReal& b);
};

ArbReal sqrt(const ArbReal& x);
ArbReal abs(const ArbReal& x);
/// |a - b| as a plain Float.
Float distance(const ArbReal& a, const ArbReal& b);
/// True when |a - b| <= a.err + b.err.
bool overlaps(const ArbReal& a, const ArbReal& b);

struct ArbComplex {
  Complex value;
  double err = 0.0;

  ArbComplex() = default;
  explicit ArbComplex(Complex v, double e = 0.0);
  explicit ArbComplex(const ArbReal& r);

  ArbReal real() const { return ArbReal(value.re, err); }
  ArbReal imag() const { return ArbReal(value.im, err); }

  ArbComplex operator-() const { return ArbComplex(-value, err); }
  friend ArbComplex operator+(const ArbComplex& a, const ArbComplex& b);
  friend ArbComplex operator-(const ArbComplex& a, const ArbComplex& b);
  friend ArbComplex operator*(const ArbComplex& a, const ArbComplex& b);
  friend ArbComplex operator/(const ArbComplex& a, const ArbComplex& b);
};

Float distance(const ArbComplex& a, const ArbComplex& b);
ArbComplex conj(const ArbComplex& z);

}  // namespace cmlab::mpnum

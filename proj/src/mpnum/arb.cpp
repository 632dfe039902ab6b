#include "cmlab/mpnum/arb.hpp"

#include <cmath>

namespace cmlab::mpnum {

double PrecisionContext::target() const { return std::pow(10.0, -digits); }

PrecisionContext PrecisionContext::raised(int extra) const {
  PrecisionContext c = *this;
  c.digits += extra;
  return c;
}

namespace {
double mag(const Float& x) { return std::fabs(x.to_double()); }
double rounding(const Float& x) { return 2.0 * ulp(x); }
double mag(const Complex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }
double rounding(const Complex& z) { return 2.0 * (ulp(z.re) + ulp(z.im)); }
}  // namespace

ArbReal::ArbReal(Float v, double e) : value(std::move(v)), err(e) {}

ArbReal ArbReal::from_rational(const mpq_class& q, mpfr_prec_t bits) {
  Float v(q, bits);
  const double e = v.is_integer() ? 0.0 : ulp(v);
  return ArbReal(std::move(v), e);
}

ArbReal operator+(const ArbReal& a, const ArbReal& b) {
  Float v = a.value + b.value;
  const double e = a.err + b.err + rounding(v);
  return ArbReal(std::move(v), e);
}

ArbReal operator-(const ArbReal& a, const ArbReal& b) {
  Float v = a.value - b.value;
  const double e = a.err + b.err + rounding(v);
  return ArbReal(std::move(v), e);
}

ArbReal operator*(const ArbReal& a, const ArbReal& b) {
  Float v = a.value * b.value;
  const double e = mag(a.value) * b.err + mag(b.value) * a.err + a.err * b.err + rounding(v);
  return ArbReal(std::move(v), e);
}

ArbReal operator/(const ArbReal& a, const ArbReal& b) {
  Float v = a.value / b.value;
  const double bm = mag(b.value);
  // first-order bound, widened when b's interval approaches zero
  const double denom = bm - b.err > 0.0 ? bm - b.err : bm;
  const double e = (a.err + mag(v) * b.err) / denom + rounding(v);
  return ArbReal(std::move(v), e);
}

ArbReal sqrt(const ArbReal& x) {
  Float v = sqrt(x.value);
  const double m = mag(v);
  const double e = (m > 0.0 ? x.err / (2.0 * m) : std::sqrt(x.err)) + rounding(v);
  return ArbReal(std::move(v), e);
}

ArbReal abs(const ArbReal& x) { return ArbReal(abs(x.value), x.err); }

Float distance(const ArbReal& a, const ArbReal& b) { return abs(a.value - b.value); }

bool overlaps(const ArbReal& a, const ArbReal& b) {
  return distance(a, b).to_double() <= a.err + b.err;
}

ArbComplex::ArbComplex(Complex v, double e) : value(std::move(v)), err(e) {}

ArbComplex::ArbComplex(const ArbReal& r) : value(r.value), err(r.err) {}

ArbComplex operator+(const ArbComplex& a, const ArbComplex& b) {
  Complex v = a.value + b.value;
  const double e = a.err + b.err + rounding(v);
  return ArbComplex(std::move(v), e);
}

ArbComplex operator-(const ArbComplex& a, const ArbComplex& b) {
  Complex v = a.value - b.value;
  const double e = a.err + b.err + rounding(v);
  return ArbComplex(std::move(v), e);
}

ArbComplex operator*(const ArbComplex& a, const ArbComplex& b) {
  Complex v = a.value * b.value;
  const double e = mag(a.value) * b.err + mag(b.value) * a.err + a.err * b.err + rounding(v);
  return ArbComplex(std::move(v), e);
}

ArbComplex operator/(const ArbComplex& a, const ArbComplex& b) {
  Complex v = a.value / b.value;
  const double bm = mag(b.value);
  const double denom = bm - b.err > 0.0 ? bm - b.err : bm;
  const double e = (a.err + mag(v) * b.err) / denom + rounding(v);
  return ArbComplex(std::move(v), e);
}

Float distance(const ArbComplex& a, const ArbComplex& b) { return abs(a.value - b.value); }

ArbComplex conj(const ArbComplex& z) { return ArbComplex(conj(z.value), z.err); }

}  // namespace cmlab::mpnum

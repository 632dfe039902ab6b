#include "cmlab/mpnum/float.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace cmlab::mpnum {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

Float::Float(mpfr_prec_t bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

Float::Float(double x, mpfr_prec_t bits) : Float(bits) { mpfr_set_d(value_, x, MPFR_RNDN); }

Float::Float(long x, mpfr_prec_t bits) : Float(bits) { mpfr_set_si(value_, x, MPFR_RNDN); }

Float::Float(const mpq_class& q, mpfr_prec_t bits) : Float(bits) {
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

Float::Float(const std::string& decimal, mpfr_prec_t bits) : Float(bits) {
  mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN);
}

Float::Float(const Float& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
  // Leave `other` as a valid minimum-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Float::~Float() { mpfr_clear(value_); }

Float Float::with_prec(mpfr_prec_t bits) const {
  Float r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Float::str(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

long Float::exponent() const {
  if (mpfr_zero_p(value_)) return -(1L << 40);
  return mpfr_get_exp(value_);
}

Float Float::operator-() const {
  Float r(prec());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {
void widen(Float& a, const Float& b) {
  if (b.prec() > a.prec()) mpfr_prec_round(a.get(), b.prec(), MPFR_RNDN);
}
}  // namespace

Float& Float::operator+=(const Float& o) {
  widen(*this, o);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Float& Float::operator-=(const Float& o) {
  widen(*this, o);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Float& Float::operator*=(const Float& o) {
  widen(*this, o);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Float& Float::operator/=(const Float& o) {
  widen(*this, o);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Float& Float::operator*=(long o) {
  mpfr_mul_si(value_, value_, o, MPFR_RNDN);
  return *this;
}
Float& Float::operator/=(long o) {
  mpfr_div_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const Float& a, const Float& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define CMLAB_UNARY(name, fn)          \
  Float name(const Float& x) {         \
    Float r(x.prec());                 \
    fn(r.get(), x.get(), MPFR_RNDN);   \
    return r;                          \
  }

CMLAB_UNARY(abs, mpfr_abs)
CMLAB_UNARY(sqrt, mpfr_sqrt)
CMLAB_UNARY(exp, mpfr_exp)
CMLAB_UNARY(log, mpfr_log)
CMLAB_UNARY(sin, mpfr_sin)
CMLAB_UNARY(cos, mpfr_cos)
#undef CMLAB_UNARY

Float atan2(const Float& y, const Float& x) {
  Float r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Float pow(const Float& x, const Float& y) {
  Float r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Float pow(const Float& x, long n) {
  Float r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Float ldexp(const Float& x, long e) {
  Float r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Float max(const Float& a, const Float& b) { return a < b ? b : a; }

Float const_pi(mpfr_prec_t bits) {
  Float r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Float const_euler(mpfr_prec_t bits) {
  Float r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Float const_log2(mpfr_prec_t bits) {
  Float r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

double ulp(const Float& x) {
  if (x.is_zero()) return 0.0;
  return std::ldexp(1.0, static_cast<int>(x.exponent() - x.prec()));
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Float r = re * o.re - im * o.im;
  Float i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Float den = o.re * o.re + o.im * o.im;
  Float r = (re * o.re + im * o.im) / den;
  Float i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Float& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Float& o) {
  re /= o;
  im /= o;
  return *this;
}

Float abs(const Complex& z) {
  Float r(z.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Float arg(const Complex& z) { return atan2(z.im, z.re); }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex sqrt(const Complex& z) {
  const mpfr_prec_t p = z.prec();
  if (z.is_zero()) return Complex(p);
  // Principal root: re >= 0, computed without cancellation.
  const Float r = abs(z);
  if (z.re.sign() >= 0) {
    Float a = sqrt((r + z.re) / 2L);
    Float b = z.im / (a * 2L);
    return {std::move(a), std::move(b)};
  }
  Float b = sqrt((r - z.re) / 2L);
  if (z.im.sign() < 0) b = -b;
  Float a = z.im / (b * 2L);
  return {std::move(a), std::move(b)};
}

Complex exp(const Complex& z) {
  const Float m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sin(const Complex& z) {
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  const Float ey = exp(z.im);
  const Float emy = Float(1L, z.prec()) / ey;
  const Float ch = (ey + emy) / 2L;
  const Float sh = (ey - emy) / 2L;
  return {sin(z.re) * ch, cos(z.re) * sh};
}

Complex expi(const Float& theta) { return {cos(theta), sin(theta)}; }

}  // namespace cmlab::mpnum

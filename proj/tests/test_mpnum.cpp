#include "doctest.h"

#include "cmlab/error.hpp"
#include "cmlab/mpnum/special.hpp"
#include "oracle/quadrature.hpp"

#include <cmath>
#include <random>

using namespace cmlab;
using namespace cmlab::mpnum;

namespace {

PrecisionContext ctx30() { return PrecisionContext{30, 10, 100000}; }

ArbReal real(double x, const PrecisionContext& c) { return ArbReal(Float(x, c.bits()), 0.0); }
ArbReal rational(long n, long d, const PrecisionContext& c) {
  return ArbReal::from_rational(mpq_class(n, d), c.bits());
}

// |a - b| relative to |b|
double rel(const Float& a, const Float& b) { return (abs(a - b) / abs(b)).to_double(); }

}  // namespace

TEST_CASE("bernoulli numbers and polynomials") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(13) == 0);
  // B_n(1) = B_n for n != 1; B_2(x) = x^2 - x + 1/6
  CHECK(bernoulli_poly(6, 1) == bernoulli(6));
  CHECK(bernoulli_poly(2, mpq_class(1, 3)) == mpq_class(1, 9) - mpq_class(1, 3) + mpq_class(1, 6));
}

TEST_CASE("gamma closed forms") {
  const auto c = ctx30();
  const auto p = c.bits();
  const ArbReal half = gamma(rational(1, 2, c), c);
  CHECK(rel(half.value, sqrt(const_pi(p))) < 1e-30);
  CHECK(half.err < 1e-30);

  const ArbReal five = gamma(ArbReal::exact(5, p), c);
  CHECK(rel(five.value, Float(24L, p)) < 1e-32);

  // reflection: Gamma(1/4) Gamma(3/4) = pi / sin(pi/4)
  const ArbReal prod = gamma(rational(1, 4, c), c) * gamma(rational(3, 4, c), c);
  const Float expected = const_pi(p) / sin(const_pi(p) / 4L);
  CHECK(rel(prod.value, expected) < 1e-30);
  CHECK(distance(prod, ArbReal(expected)).to_double() <= prod.err + 1e-38);
}

TEST_CASE("gamma errors at poles") {
  const auto c = ctx30();
  CHECK_THROWS_AS(gamma(ArbReal::exact(0, c.bits()), c), Error);
  CHECK_THROWS_AS(gamma(ArbReal::exact(-3, c.bits()), c), Error);
  try {
    gamma(ArbReal::exact(-2, c.bits()), c);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pole);
  }
  PrecisionContext tight = c;
  tight.max_terms = 5;
  CHECK_THROWS_AS(gamma(real(-50.5, c), tight), Error);
}

TEST_CASE("gamma agrees with MPFR's independent implementation") {
  const auto c = ctx30();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-7.9, 30.0);
  for (int i = 0; i < 40; ++i) {
    const double x = dist(rng);
    const ArbReal g = gamma(real(x, c), c);
    Float ref(c.bits());
    mpfr_gamma(ref.get(), Float(x, c.bits()).get(), MPFR_RNDN);
    CHECK(rel(g.value, ref) < 1e-32);
  }
}

TEST_CASE("complex gamma satisfies the reflection formula") {
  const auto c = ctx30();
  const auto p = c.bits();
  const ArbComplex z(Complex(Float(0.3, p), Float(1.7, p)));
  const ArbComplex one_minus_z = ArbComplex(ArbReal::exact(1, p)) - z;
  const ArbComplex lhs = gamma(z, c) * gamma(one_minus_z, c);
  Complex pz = z.value * const_pi(p);
  const Complex rhs = Complex(const_pi(p)) / sin(pz);
  CHECK((abs(lhs.value - rhs) / abs(rhs)).to_double() < 1e-30);
}

TEST_CASE("gamma recurrence on random points") {
  const auto c = ctx30();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const ArbReal z = real(dist(rng), c);
    const ArbReal next = gamma(z + ArbReal::exact(1, c.bits()), c);
    const ArbReal scaled = z * gamma(z, c);
    CHECK(distance(next, scaled).to_double() <= next.err + scaled.err);
  }
}

TEST_CASE("upper incomplete gamma") {
  const auto c = ctx30();
  const auto p = c.bits();
  const ArbReal two = ArbReal::exact(2, p);
  const ArbReal zero = ArbReal::exact(0, p);

  CHECK(rel(upper_incomplete_gamma(two, zero, c).value, Float(1L, p)) < 1e-32);
  CHECK(rel(upper_incomplete_gamma(two, ArbReal::exact(1, p), c).value, exp(Float(-1L, p)) * 2L) < 1e-32);

  for (double x : {0.1, 1.0, 10.0, 50.0}) {
    const ArbReal g = upper_incomplete_gamma(two, real(x, c), c);
    const Float xf(x, p);
    const ArbReal closed(exp(-xf) * (Float(1L, p) + xf), 0.0);
    CHECK(distance(g, closed).to_double() <= g.err + 4 * ulp(closed.value));
  }

  CHECK_THROWS_AS(upper_incomplete_gamma(zero, zero, c), Error);
  CHECK_THROWS_AS(upper_incomplete_gamma(two, real(-1.0, c), c), Error);
}

TEST_CASE("E1(1) matches quadrature at higher precision") {
  const auto c = ctx30();
  // Frozen from the tanh-sinh oracle below (computed at 60 digits).
  const Float frozen("0.219383934395520273677163775460121649031", c.bits());
  const ArbReal e1 = upper_incomplete_gamma(ArbReal::exact(0, c.bits()), ArbReal::exact(1, c.bits()), c);
  CHECK(rel(e1.value, frozen) < 1e-30);

  const mpfr_prec_t hp = bits_for_digits(60);
  const Float quad = oracle::tanh_sinh_to_infinity(
      [&](const Float& t) { return exp(-t) / t; }, Float(1L, hp), hp);
  CHECK(rel(e1.value, quad) < 1e-30);
  CHECK(abs(e1.value - quad).to_double() <= e1.err + 1e-40);
}

TEST_CASE("E1 branch switchover is continuous") {
  const auto c = ctx30();
  const auto p = c.bits();
  // Gamma(0, x) on both sides of x = 1 against the CF/series crossover
  for (double x : {0.5, 0.999, 1.001, 2.0, 7.0}) {
    const ArbReal g = upper_incomplete_gamma(ArbReal::exact(0, p), real(x, c), c);
    Float ref(p);
    mpfr_eint(ref.get(), Float(-x, p).get(), MPFR_RNDN);  // Ei(-x) = -E1(x)
    CHECK(rel(g.value, -ref) < 1e-30);
  }
}

TEST_CASE("hurwitz zeta") {
  const auto c = ctx30();
  const auto p = c.bits();
  const Float zeta2 = const_pi(p) * const_pi(p) / 6L;
  CHECK(rel(hurwitz_zeta(ArbReal::exact(2, p), ArbReal::exact(1, p), c).value, zeta2) < 1e-32);
  CHECK(rel(hurwitz_zeta(ArbReal::exact(2, p), ArbReal::exact(2, p), c).value, zeta2 - Float(1L, p)) < 1e-32);
  CHECK_THROWS_AS(hurwitz_zeta(ArbReal::exact(1, p), ArbReal::exact(1, p), c), Error);
  CHECK_THROWS_AS(hurwitz_zeta(real(1.5, c), real(-1.0, c), c), Error);
}

TEST_CASE("hurwitz zeta (3.5, 0.25) against direct summation") {
  const auto c = ctx30();
  const mpfr_prec_t p = c.bits();
  // Frozen from the oracle below: 10^6 direct terms plus the midpoint
  // integral tail int_{N-1/2}^inf x^-s dx (tail error ~ s(s+1)/24 N^-s-2 ~ 1e-22).
  const Float frozen("128.546958964284345780937927877", p);
  const ArbReal z = hurwitz_zeta(real(3.5, c), real(0.25, c), c);
  CHECK(rel(z.value, frozen) < 1e-21);

  const Float s(3.5, p), a(0.25, p);
  Float direct(0L, p);
  const long n_terms = 1000000;
  for (long n = 0; n < n_terms; ++n) direct += pow(Float(n, p) + a, -s);
  const Float x0 = Float(n_terms, p) + a - Float(0.5, p);
  direct += pow(x0, Float(1L, p) - s) / (s - Float(1L, p));
  CHECK(rel(z.value, direct) < 1e-21);
}

TEST_CASE("hurwitz shift identity on sampled inputs") {
  const auto c = ctx30();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> sd(1.2, 8.0), ad(0.05, 20.0);
  for (int i = 0; i < 25; ++i) {
    const ArbReal s = real(sd(rng), c), a = real(ad(rng), c);
    const ArbReal diff = hurwitz_zeta(s, a, c) - hurwitz_zeta(s, a + ArbReal::exact(1, c.bits()), c);
    const ArbReal expected(pow(a.value, -s.value), 0.0);
    CHECK(distance(diff, expected).to_double() <= diff.err + 4 * ulp(expected.value));
  }
}

TEST_CASE("hurwitz zeta at 150 digits and below the double range") {
  const PrecisionContext c{150, 10, 100000};
  const mpfr_prec_t p = c.bits();
  Float expected = const_pi(p) * const_pi(p) / 6L;
  for (long n = 1; n < 10; ++n) expected -= Float(1L, p) / (Float(n, p) * Float(n, p));
  CHECK(rel(hurwitz_zeta(ArbReal::exact(2, p), ArbReal::exact(10, p), c).value, expected) < 1e-150);

  // zeta(100, 3000) is about 1e-348
  const ArbReal s = ArbReal::exact(100, p), a = ArbReal::exact(3000, p);
  const Float z0 = hurwitz_zeta(s, a, c).value;
  const Float z1 = hurwitz_zeta(s, a + ArbReal::exact(1, p), c).value;
  CHECK(z0.to_double() == 0.0);
  CHECK(rel(z0 - z1, pow(a.value, -s.value)) < 1e-150);
}

TEST_CASE("agm") {
  const auto c = ctx30();
  const auto p = c.bits();
  const ArbComplex one(ArbReal::exact(1, p));
  CHECK(rel(agm(one, one, c).value.re, Float(1L, p)) < 1e-35);
  const ArbComplex x(real(3.7, c));
  CHECK(rel(agm(x, x, c).value.re, Float(3.7, p)) < 1e-35);

  // oracle: the same iteration in double precision
  double a = 1.0, b = std::sqrt(2.0);
  for (int i = 0; i < 10; ++i) {
    const double m = (a + b) / 2, g = std::sqrt(a * b);
    a = m;
    b = g;
  }
  const ArbComplex r = agm(one, ArbComplex(sqrt(ArbReal::exact(2, p))), c);
  CHECK(std::fabs(r.value.re.to_double() - a) < 1e-14);
  CHECK(r.value.im.is_zero());
  CHECK_THROWS_AS(agm(one, ArbComplex(ArbReal::exact(0, p)), c), Error);
}

TEST_CASE("agm one-step invariance, real and complex") {
  const auto c = ctx30();
  const auto p = c.bits();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.1, 10.0);
  for (int i = 0; i < 20; ++i) {
    const ArbComplex a(real(d(rng), c)), b(real(d(rng), c));
    const ArbComplex m = (a + b) * ArbComplex(real(0.5, c));
    const ArbComplex g(sqrt(a.value * b.value));
    const ArbComplex lhs = agm(a, b, c), rhs = agm(m, g, c);
    CHECK(distance(lhs, rhs).to_double() <= lhs.err + rhs.err);
  }
  // a complex pair: the limit does not depend on swapping the arguments
  const ArbComplex za(Complex(Float(1L, p), Float(2L, p))), zb(Complex(Float(-0.5, p), Float(0.25, p)));
  const ArbComplex l1 = agm(za, zb, c), l2 = agm(zb, za, c);
  CHECK(distance(l1, l2).to_double() <= l1.err + l2.err);
}

TEST_CASE("beta function") {
  const auto c = ctx30();
  const auto p = c.bits();
  CHECK(rel(beta_fn(rational(1, 2, c), rational(1, 2, c), c).value, const_pi(p)) < 1e-32);
  CHECK(rel(beta_fn(ArbReal::exact(1, p), ArbReal::exact(1, p), c).value, Float(1L, p)) < 1e-32);
  CHECK_THROWS_AS(beta_fn(rational(1, 2, c), rational(-1, 2, c), c), Error);

  // oracle: int_0^1 t^-1/2 (1-t)^-2/3 dt at 60 digits; frozen value from it
  const Float frozen("4.20654631597636278352505723715", p);
  const ArbReal b = beta_fn(rational(1, 2, c), rational(1, 3, c), c);
  CHECK(rel(b.value, frozen) < 1e-29);
  const mpfr_prec_t hp = bits_for_digits(60);
  const Float quad = oracle::tanh_sinh(
      [&](const Float&, const Float& t, const Float& one_minus_t) {
        return pow(t, Float(-0.5, hp)) * pow(one_minus_t, Float(-2L, hp) / Float(3L, hp));
      },
      Float(0L, hp), Float(1L, hp), hp);
  CHECK(rel(b.value, quad) < 1e-30);
}

TEST_CASE("beta symmetry on random pairs") {
  const auto c = ctx30();
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    const ArbReal a = real(d(rng), c), b = real(d(rng), c);
    const ArbReal ab = beta_fn(a, b, c), ba = beta_fn(b, a, c);
    CHECK(distance(ab, ba).to_double() <= ab.err + ba.err);
  }
}

TEST_CASE("carlson RF") {
  const auto c = ctx30();
  const auto p = c.bits();
  // R_F(x, x, x) = x^-1/2 and R_F(0, 1, 1) = pi/2
  const ArbComplex four(ArbReal::exact(4, p));
  CHECK(rel(carlson_rf(four, four, four, c).value.re, Float(0.5, p)) < 1e-32);
  const ArbComplex zero(ArbReal::exact(0, p)), one(ArbReal::exact(1, p));
  CHECK(rel(carlson_rf(zero, one, one, c).value.re, const_pi(p) / 2L) < 1e-32);
  // R_F(0, 1, 2) relates to the lemniscate constant: Gamma(1/4)^2 / (4 sqrt(2 pi))
  const ArbComplex two(ArbReal::exact(2, p));
  const Float g14 = gamma(rational(1, 4, c), c).value;
  const Float lem = g14 * g14 / (sqrt(const_pi(p) * 2L) * 4L);
  CHECK(rel(carlson_rf(zero, one, two, c).value.re, lem) < 1e-30);
  CHECK_THROWS_AS(carlson_rf(ArbComplex(ArbReal::exact(-1, p)), one, two, c), Error);
}

TEST_CASE("results are bit-identical across repeated evaluation") {
  const auto c = ctx30();
  const ArbReal a = gamma(rational(1, 3, c), c);
  const ArbReal b = gamma(rational(1, 3, c), c);
  CHECK(a.value == b.value);
  CHECK(a.err == b.err);
}

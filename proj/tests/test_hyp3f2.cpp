#include "doctest.h"

#include "cmlab/error.hpp"
#include "cmlab/hyp/hyp3f2.hpp"
#include "cmlab/mpnum/special.hpp"

#include <cmath>
#include <random>

using namespace cmlab;
using namespace cmlab::hyp;
using mpnum::ArbReal;
using mpnum::PrecisionContext;

namespace {

const PrecisionContext kCtx{30, 10, 100000};

// Low-precision oracle: 10^7 terms in long double plus the leading tail
// C N^-s / s, where C comes from the C library's gamma.
long double naive_3f2(const HypParams& p) {
  const long double a1 = p.a1.get_d(), a2 = p.a2.get_d(), a3 = p.a3.get_d(), b1 = p.b1.get_d(), b2 = p.b2.get_d();
  const long n_terms = 10000000;
  long double sum = 0, t = 1;
  for (long n = 0; n < n_terms; ++n) {
    sum += t;
    t *= (a1 + n) * (a2 + n) * (a3 + n) / ((b1 + n) * (b2 + n) * (n + 1.0L));
  }
  const long double s = b1 + b2 - a1 - a2 - a3;
  const long double c = std::tgamma(b1) * std::tgamma(b2) / (std::tgamma(a1) * std::tgamma(a2) * std::tgamma(a3));
  return sum + c * std::pow(static_cast<long double>(n_terms) - 0.5L, -s) / s;
}

HypParams ftilde_params(const mpq_class& a, const mpq_class& b) { return {a, b, a + b - 1, a + b, a + b}; }

double rel(const ArbReal& x, long double y) { return std::fabs(static_cast<double>((x.value.to_long_double() - y) / y)); }

}  // namespace

TEST_CASE("exact term recurrence for n <= 100") {
  const HypParams p = ftilde_params(mpq_class(1, 2), mpq_class(1, 3));
  for (long n = 0; n <= 100; n += 7) {
    const mpq_class ratio = term_exact(p, n + 1) / term_exact(p, n);
    const mpq_class m(n);
    CHECK(ratio == (p.a1 + m) * (p.a2 + m) * (p.a3 + m) / ((p.b1 + m) * (p.b2 + m) * (m + 1)));
    CHECK(ratio == term_ratio(p, n));
  }
}

TEST_CASE("tail coefficients reproduce large-n terms") {
  // t_n against C n^-(1+s) sum d_i n^-i at n = 400, in exact-enough MPFR arithmetic
  const HypParams p = ftilde_params(mpq_class(1, 4), mpq_class(1, 4));
  const auto d = tail_coefficients(p, 20);
  CHECK(d[0] == 1);
  const long n = 400;
  const auto bits = kCtx.bits();
  const mpnum::Float tn(term_exact(p, n), bits);
  const auto rat = [&](const mpq_class& q) { return ArbReal::from_rational(q, bits); };
  using mpnum::gamma;
  const ArbReal c = gamma(rat(p.b1), kCtx) * gamma(rat(p.b2), kCtx) /
                    (gamma(rat(p.a1), kCtx) * gamma(rat(p.a2), kCtx) * gamma(rat(p.a3), kCtx));
  mpnum::Float series(0L, bits);
  for (int i = 20; i >= 0; --i) series = series / n + mpnum::Float(d[i], bits);
  const mpnum::Float approx = c.value * series * mpnum::pow(mpnum::Float(n, bits), mpnum::Float(-(1 + p.margin()), bits));
  CHECK((abs(approx - tn) / tn).to_double() < 1e-38);
}

TEST_CASE("terminating series") {
  CHECK(f32_unit({0, mpq_class(1, 3), mpq_class(2, 5), mpq_class(7, 2), 2}, kCtx).value == mpnum::Float(1L, 64));
  // a1 = -1: 1 + a2 a3 / (b1 b2)
  const ArbReal r = f32_unit({-1, 2, 3, 5, 7}, kCtx);
  CHECK(std::fabs(r.to_double() - (1.0 - 6.0 / 35.0)) < 1e-15);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(f32_unit({1, 1, 1, 1, 1}, kCtx), Error);
  try {
    f32_unit({mpq_class(1, 2), 1, 1, 2, 1}, kCtx);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::divergence);
  }
  try {
    f32_unit({mpq_class(1, 2), 1, 1, -2, 5}, kCtx);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pole);
  }
  CHECK_THROWS_AS(ftilde({-1, mpq_class(1, 2)}, kCtx), Error);
  CHECK_THROWS_AS(ftilde({mpq_class(1, 2), mpq_class(-1, 2)}, kCtx), Error);
}

TEST_CASE("Gauss reduction on a fixed instance") {
  // 3F2(a, b, c; c, d; 1) = Gamma(d)Gamma(d-a-b)/(Gamma(d-a)Gamma(d-b)), (a, b, d) = (1/3, 1/4, 2)
  const mpq_class a(1, 3), b(1, 4), c(5, 7), d(2);
  const ArbReal lhs = f32_unit({a, b, c, c, d}, kCtx);
  const auto g = [](const mpq_class& x) { return mpnum::gamma(ArbReal::from_rational(x, kCtx.bits()), kCtx); };
  const ArbReal rhs = g(d) * g(d - a - b) / (g(d - a) * g(d - b));
  CHECK(mpnum::distance(lhs, rhs).to_double() <= lhs.err + rhs.err);
  CHECK(mpnum::distance(lhs, rhs).to_double() < 1e-25);
}

TEST_CASE("Gauss reduction on random admissible rationals") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(1, 40), den(2, 12);
  int checked = 0;
  while (checked < 20) {
    const mpq_class a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng)), r(num(rng), den(rng));
    mpq_class aa = a, bb = b, cc = c, rr = r;
    aa.canonicalize(), bb.canonicalize(), cc.canonicalize(), rr.canonicalize();
    if (aa > 3 || bb > 3 || rr < mpq_class(1, 5) || rr > 3) continue;
    const mpq_class d = aa + bb + rr;
    const ArbReal lhs = f32_unit({aa, bb, cc, cc, d}, kCtx);
    const auto g = [](const mpq_class& x) { return mpnum::gamma(ArbReal::from_rational(x, kCtx.bits()), kCtx); };
    const ArbReal rhs = g(d) * g(rr) / (g(d - aa) * g(d - bb));
    CHECK(mpnum::distance(lhs, rhs).to_double() <= std::max(lhs.err + rhs.err, 1e-25 * std::fabs(rhs.to_double())));
    CHECK(mpnum::distance(lhs, rhs).to_double() < 1e-25 * std::max(1.0, std::fabs(rhs.to_double())));
    ++checked;
  }
}

TEST_CASE("accelerated sums agree with the naive oracle") {
  const HypParams main36 = ftilde_params(mpq_class(1, 2), mpq_class(1, 3));
  CHECK(main36.a3 == mpq_class(-1, 6));
  CHECK(main36.b1 == mpq_class(5, 6));
  const ArbReal v = f32_unit(main36, kCtx);
  CHECK(rel(v, naive_3f2(main36)) < 1e-8);
  // frozen from the same oracle
  CHECK(std::fabs(v.to_double() - 0.9344328584844) < 1e-9);
  CHECK(v.err <= 1e-30 * std::fabs(v.to_double()));

  const ArbReal ft = ftilde({mpq_class(1, 4), mpq_class(1, 4)}, kCtx);
  const long double b = std::tgamma(0.25L) * std::tgamma(0.25L) / std::tgamma(0.5L);
  CHECK(rel(ft, b * b * naive_3f2(ftilde_params(mpq_class(1, 4), mpq_class(1, 4)))) < 1e-8);
}

TEST_CASE("tail correctness for the four identity parameter sets") {
  for (const auto& [a, b] : {std::pair{mpq_class(1, 2), mpq_class(1, 3)}, std::pair{mpq_class(1, 2), mpq_class(2, 3)},
                             std::pair{mpq_class(1, 4), mpq_class(1, 4)}, std::pair{mpq_class(3, 4), mpq_class(3, 4)}}) {
    const HypParams p = ftilde_params(a, b);
    const ArbReal ref = f32_unit(p, kCtx);
    for (long m : {1000L, 10000L}) {
      const ArbReal split = f32_unit_split(p, m, kCtx);
      CHECK(mpnum::distance(ref, split).to_double() <= ref.err + split.err);
    }
  }
}

TEST_CASE("F tilde symmetry and monotonicity") {
  const ArbReal x = ftilde({mpq_class(1, 4), mpq_class(3, 4)}, kCtx);
  const ArbReal y = ftilde({mpq_class(3, 4), mpq_class(1, 4)}, kCtx);
  CHECK(mpnum::distance(x, y).to_double() <= x.err + y.err);

  const ArbReal f13 = ftilde({mpq_class(1, 2), mpq_class(1, 3)}, kCtx);
  const ArbReal f23 = ftilde({mpq_class(1, 2), mpq_class(2, 3)}, kCtx);
  CHECK((f13 - f23).to_double() > 2 * (f13.err + f23.err));
  const ArbReal f14 = ftilde({mpq_class(1, 4), mpq_class(1, 4)}, kCtx);
  const ArbReal f34 = ftilde({mpq_class(3, 4), mpq_class(3, 4)}, kCtx);
  CHECK((f14 - f34).to_double() > 2 * (f14.err + f34.err));
}

TEST_CASE("hypergeometric side of the identity") {
  const ArbReal r36 = rhs_main(36, kCtx);
  const ArbReal r64 = rhs_main(64, kCtx);
  CHECK(r36.to_double() > 0);
  CHECK(r64.to_double() > 0);
  const ArbReal r36_hi = rhs_main(36, PrecisionContext{50, 10, 100000});
  CHECK(mpnum::distance(r36, r36_hi).to_double() < 1e-30);
  CHECK(mpnum::distance(r36, r36_hi).to_double() <= r36.err + r36_hi.err);
  CHECK_THROWS_AS(rhs_main(37, kCtx), Error);
}

TEST_CASE("bit-identical repeated evaluation") {
  const ArbReal a = rhs_main(64, kCtx), b = rhs_main(64, kCtx);
  CHECK(a.value == b.value);
  CHECK(a.err == b.err);
}

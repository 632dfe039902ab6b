#include "cmlab/mpnum/special.hpp"

#include "cmlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace cmlab::mpnum {

namespace {

double mag(const Float& x) { return std::fabs(x.to_double()); }
double mag(const Complex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_nonpositive_integer(const Float& x) { return x.sign() <= 0 && x.is_integer(); }

}  // namespace

mpq_class bernoulli(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative Bernoulli index");
  if (n == 1) return mpq_class(-1, 2);
  if (n > 1 && n % 2 == 1) return 0;

  // Grows on demand; entries never change once written.
  static std::mutex mutex;
  static std::vector<mpq_class> table{mpq_class(1), mpq_class(-1, 2)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    if (m % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    mpq_class acc = 0;
    for (int k = 0; k < m; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      acc += mpq_class(binomial(m + 1, k)) * table[k];
    }
    mpq_class bm = -acc / (m + 1);
    bm.canonicalize();
    table.push_back(bm);
  }
  return table[n];
}

mpq_class bernoulli_poly(int n, const mpq_class& x) {
  mpq_class acc = 0;
  mpq_class xp = 1;  // x^(n-k), accumulated from k = n downwards
  for (int k = n; k >= 0; --k) {
    acc += mpq_class(binomial(n, k)) * bernoulli(k) * xp;
    xp *= x;
  }
  acc.canonicalize();
  return acc;
}

ArbComplex gamma(const ArbComplex& z, const PrecisionContext& ctx) {
  const mpfr_prec_t p = std::max(ctx.bits(), z.value.prec());
  if (z.value.im.is_zero() && is_nonpositive_integer(z.value.re)) {
    throw Error(Errc::pole, "gamma at nonpositive integer " + z.value.re.str(6));
  }
  const int work_digits = ctx.digits + ctx.guard;
  const double radius = std::max(10.0, 0.5 * work_digits + 5.0);

  Complex zz(z.value.re.with_prec(p), z.value.im.with_prec(p));
  long shift = 0;
  const double re = zz.re.to_double();
  if (re < radius) shift = static_cast<long>(std::ceil(radius - re));
  if (shift > ctx.max_terms) throw Error(Errc::precision_unachievable, "gamma shift exceeds max_terms");

  Complex w = zz;
  Complex prod(Float(1L, p), Float(0L, p));
  for (long j = 0; j < shift; ++j) {
    prod *= w;
    w.re += Float(1L, p);
  }

  // log Gamma(w) = (w - 1/2) log w - w + log(2 pi)/2 + sum_k B_2k / (2k (2k-1) w^(2k-1))
  const Complex logw = log(w);
  Complex half_w = w;
  half_w.re -= Float(0.5, p);
  Complex lg = half_w * logw - w;
  lg.re += log(const_pi(p) * 2L) / 2L;

  const Complex w2 = w * w;
  Complex wpow = w;  // w^(2k-1)
  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  double tail = 0.0;
  double prev = INFINITY;
  bool converged = false;
  for (int k = 1; k <= 400; ++k) {
    const Float coeff(bernoulli(2 * k) / mpq_class(2 * k * (2 * k - 1)), p);
    Complex term = Complex(coeff) / wpow;
    const double tm = mag(term);
    if (tm > prev) break;  // asymptotic series started to diverge
    lg += term;
    prev = tm;
    wpow *= w2;
    if (tm < eps) {
      const Float next_coeff(bernoulli(2 * k + 2) / mpq_class((2 * k + 2) * (2 * k + 1)), p);
      tail = 2.0 * mag(Complex(next_coeff) / wpow);
      converged = true;
      break;
    }
  }
  if (!converged) throw Error(Errc::precision_unachievable, "Stirling series did not reach target");

  Complex g = exp(lg);
  if (shift > 0) g /= prod;
  const double gm = mag(g);
  const double rel = tail + (shift + 40) * eps * 4.0 + z.err * (std::fabs(std::log(std::max(mag(zz), 1.0))) + 3.0);
  return ArbComplex(std::move(g), gm * rel);
}

ArbReal gamma(const ArbReal& x, const PrecisionContext& ctx) {
  ArbComplex g = gamma(ArbComplex(x), ctx);
  return ArbReal(g.value.re, g.err);
}

namespace {

// E1(x) = -gamma - log x - sum_{k>=1} (-x)^k / (k k!)  for 0 < x < 1
ArbReal e1_series(const Float& x, const PrecisionContext& ctx) {
  const mpfr_prec_t p = x.prec();
  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  Float sum(0L, p);
  Float power(1L, p);  // (-x)^k / k!
  double last = 0.0;
  long k = 1;
  for (; k <= ctx.max_terms; ++k) {
    power *= -x;
    power /= k;
    Float term = power / k;
    sum += term;
    last = mag(term);
    if (last < eps * std::max(mag(sum), 1e-300)) break;
  }
  if (k > ctx.max_terms) throw Error(Errc::precision_unachievable, "E1 series exceeded max_terms");
  Float v = -const_euler(p) - log(x) - sum;
  const double e = 2.0 * last + (k + 8) * eps * (mag(v) + 1.0);
  return ArbReal(std::move(v), e);
}

// Continued fraction for Gamma(s, x), modified Lentz; x large enough relative to s.
ArbReal incgamma_cf(const Float& s, const Float& x, const PrecisionContext& ctx) {
  const mpfr_prec_t p = x.prec();
  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  const Float tiny = ldexp(Float(1L, p), -static_cast<long>(p) * 4);
  const Float one(1L, p);
  Float b = x + one - s;
  Float c = one / tiny;
  Float d = one / b;
  Float h = d;
  double last_delta = 1.0;
  long k = 1;
  for (; k <= ctx.max_terms; ++k) {
    const Float an = -(Float(k, p) * (Float(k, p) - s));
    b += Float(2L, p);
    d = an * d + b;
    if (d.is_zero()) d = tiny;
    c = b + an / c;
    if (c.is_zero()) c = tiny;
    d = one / d;
    const Float delta = d * c;
    h *= delta;
    last_delta = mag(delta - one);
    if (last_delta < eps) break;
  }
  if (k > ctx.max_terms) throw Error(Errc::precision_unachievable, "incomplete gamma continued fraction exceeded max_terms");
  Float v = exp(s * log(x) - x) * h;
  const double e = mag(v) * (4.0 * last_delta + (k + 16) * eps * 4.0);
  return ArbReal(std::move(v), e);
}

// Lower incomplete gamma by its power series, for non-integer s or s > 0.
ArbReal lower_incgamma_series(const Float& s, const Float& x, const PrecisionContext& ctx) {
  const mpfr_prec_t p = x.prec();
  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  Float term = Float(1L, p) / s;
  Float sum = term;
  Float denom = s;
  long k = 1;
  for (; k <= ctx.max_terms; ++k) {
    denom += Float(1L, p);
    term *= x;
    term /= denom;
    sum += term;
    if (mag(term) < eps * mag(sum)) break;
  }
  if (k > ctx.max_terms) throw Error(Errc::precision_unachievable, "lower incomplete gamma series exceeded max_terms");
  Float v = exp(s * log(x) - x) * sum;
  const double e = mag(v) * (k + 16) * eps * 4.0;
  return ArbReal(std::move(v), e);
}

}  // namespace

ArbReal upper_incomplete_gamma(const ArbReal& s_in, const ArbReal& x_in, const PrecisionContext& ctx) {
  const mpfr_prec_t p = std::max(ctx.bits(), std::max(s_in.value.prec(), x_in.value.prec()));
  const Float s = s_in.value.with_prec(p);
  const Float x = x_in.value.with_prec(p);
  if (x.sign() < 0) throw Error(Errc::domain, "incomplete gamma requires x >= 0");

  if (x.is_zero()) {
    if (s.sign() <= 0) throw Error(Errc::divergence, "Gamma(s, 0) diverges for s <= 0");
    return gamma(ArbReal(s, s_in.err), ctx);
  }

  if (s.is_integer()) {
    const long n = s.round_long();
    if (n >= 1) {
      // Gamma(n, x) = (n-1)! e^-x sum_{k<n} x^k / k!
      Float sum(0L, p);
      Float term(1L, p);
      for (long k = 0; k < n; ++k) {
        if (k > 0) {
          term *= x;
          term /= k;
        }
        sum += term;
      }
      Float fact(1L, p);
      for (long k = 2; k < n; ++k) fact *= k;
      Float v = fact * exp(-x) * sum;
      const double e = 4.0 * (n + 8) * ulp(v) + mag(v) * x_in.err;
      return ArbReal(std::move(v), e);
    }
    if (n == 0) {
      ArbReal e1 = x < Float(1L, p) ? e1_series(x, ctx) : incgamma_cf(s, x, ctx);
      // dE1/dx = -e^-x / x
      e1.err += x_in.err * exp(-x).to_double() / x.to_double();
      return e1;
    }
    // Negative integers: Gamma(s, x) = (Gamma(s+1, x) - x^s e^-x) / s
    ArbReal up = upper_incomplete_gamma(ArbReal(s + Float(1L, p), 0.0), x_in, ctx);
    Float v = (up.value - exp(s * log(x) - x)) / s;
    const double e = up.err / std::fabs(s.to_double()) + 4.0 * ulp(v);
    return ArbReal(std::move(v), e);
  }

  if (x >= max(Float(1L, p), s)) return incgamma_cf(s, x, ctx);
  const ArbReal g = gamma(ArbReal(s, 0.0), ctx);
  const ArbReal lower = lower_incgamma_series(s, x, ctx);
  return g - lower;
}

ArbReal hurwitz_zeta(const ArbReal& s_in, const ArbReal& a_in, const PrecisionContext& ctx) {
  const mpfr_prec_t p = std::max(ctx.bits(), std::max(s_in.value.prec(), a_in.value.prec()));
  const Float s = s_in.value.with_prec(p);
  const Float a = a_in.value.with_prec(p);
  const Float one(1L, p);
  if (!(s > one)) throw Error(Errc::domain, "hurwitz_zeta requires s > 1");
  if (!(a.sign() > 0)) throw Error(Errc::domain, "hurwitz_zeta requires a > 0");

  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  const int work_digits = ctx.digits + ctx.guard;
  const double sd = s.to_double();
  const double ad = a.to_double();
  const double want = sd + work_digits + 10.0;
  const long n_head = ad >= want ? 0 : static_cast<long>(std::ceil(want - ad));
  if (n_head > ctx.max_terms) throw Error(Errc::precision_unachievable, "hurwitz_zeta head exceeds max_terms");

  Float head(0L, p);
  for (long n = 0; n < n_head; ++n) head += pow(a + Float(n, p), -s);

  const Float big = a + Float(n_head, p);  // N + a
  const Float big_pow = pow(big, -s);      // (N+a)^-s
  Float sum = head + big * big_pow / (s - one) + big_pow / 2L;

  // Euler-Maclaurin correction terms B_2k/(2k)! (s)_(2k-1) (N+a)^(-s-2k+1)
  Float rising = s;           // (s)_(2k-1)
  Float xpow = big_pow / big; // (N+a)^(-s-1)
  const Float inv_big2 = one / (big * big);
  Float fact(2L, p);          // (2k)!
  double tail = 0.0;
  Float prev;
  bool converged = false;
  for (int k = 1; k <= 500; ++k) {
    if (k > 1) {
      rising *= (s + Float(2L * k - 3, p)) * (s + Float(2L * k - 2, p));
      xpow *= inv_big2;
      fact *= static_cast<long>(2 * k - 1) * static_cast<long>(2 * k);
    }
    const Float term = Float(bernoulli(2 * k), p) / fact * rising * xpow;
    // Compared in MPFR: for large s and a the terms fall below the double range.
    const Float tm = abs(term);
    if (k > 1 && tm > prev) break;
    sum += term;
    prev = tm;
    if (tm < abs(sum) * Float(eps, p)) {
      tail = 2.0 * tm.to_double();
      converged = true;
      break;
    }
  }
  if (!converged) throw Error(Errc::precision_unachievable, "Euler-Maclaurin tail did not converge");

  const double e = tail + (n_head + 32) * 4.0 * ulp(sum) +
                   // sensitivity to s and a
                   s_in.err * mag(sum) * std::log(std::max(ad, 2.0)) + a_in.err * sd * mag(sum) / ad;
  return ArbReal(std::move(sum), e);
}

ArbComplex agm(const ArbComplex& a_in, const ArbComplex& b_in, const PrecisionContext& ctx) {
  const mpfr_prec_t p = std::max(ctx.bits(), std::max(a_in.value.prec(), b_in.value.prec()));
  if (a_in.value.is_zero() || b_in.value.is_zero()) throw Error(Errc::domain, "agm requires nonzero arguments");
  Complex a(a_in.value.re.with_prec(p), a_in.value.im.with_prec(p));
  Complex b(b_in.value.re.with_prec(p), b_in.value.im.with_prec(p));
  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  int it = 0;
  const int limit = 200 + static_cast<int>(p);
  // a few ulps of slack: the last step squares the gap, so it lands far below eps
  while (mag(a - b) > 16.0 * eps * mag(a)) {
    if (++it > limit) throw Error(Errc::nonconvergence, "agm iteration did not converge");
    Complex mean = (a + b) / Float(2L, p);
    Complex geo = sqrt(a * b);
    // right choice: |mean - geo| <= |mean + geo|
    if (mag(mean - geo) > mag(mean + geo)) geo = -geo;
    a = std::move(mean);
    b = std::move(geo);
  }
  const double m = mag(a);
  const double e = m * (it + 4) * 8.0 * eps + a_in.err + b_in.err;
  return ArbComplex(std::move(a), e);
}

ArbReal beta_fn(const ArbReal& a, const ArbReal& b, const PrecisionContext& ctx) {
  const ArbReal sum = a + b;
  if (is_nonpositive_integer(a.value) || is_nonpositive_integer(b.value) || is_nonpositive_integer(sum.value)) {
    throw Error(Errc::pole, "beta at a pole");
  }
  return gamma(a, ctx) * gamma(b, ctx) / gamma(sum, ctx);
}

ArbComplex carlson_rf(const ArbComplex& x_in, const ArbComplex& y_in, const ArbComplex& z_in,
                      const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.bits();
  auto widen = [p](const Complex& c) { return Complex(c.re.with_prec(p), c.im.with_prec(p)); };
  Complex x = widen(x_in.value), y = widen(y_in.value), z = widen(z_in.value);
  auto on_cut = [](const Complex& c) { return c.im.is_zero() && c.re.sign() < 0; };
  if (on_cut(x) || on_cut(y) || on_cut(z)) throw Error(Errc::domain, "carlson_rf argument on the negative real axis");
  if ((x.is_zero() + y.is_zero() + z.is_zero()) > 1) throw Error(Errc::domain, "carlson_rf with two zero arguments");

  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  const Float three(3L, p);
  const Float four(4L, p);
  int it = 0;
  while (true) {
    const Complex mean = (x + y + z) / three;
    const double am = mag(mean);
    const double dev = std::max({mag(x - mean), mag(y - mean), mag(z - mean)}) / am;
    // truncation after the fifth-order terms is O(dev^6)
    if (std::pow(dev, 6) < eps) break;
    if (++it > 400) throw Error(Errc::nonconvergence, "carlson_rf duplication did not converge");
    const Complex sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
    const Complex lambda = sx * sy + sy * sz + sz * sx;
    x = (x + lambda) / four;
    y = (y + lambda) / four;
    z = (z + lambda) / four;
  }
  const Complex mean = (x + y + z) / three;
  const Complex one(Float(1L, p), Float(0L, p));
  const Complex dx = one - x / mean;
  const Complex dy = one - y / mean;
  const Complex dz = -(dx + dy);
  const Complex e2 = dx * dy - dz * dz;
  const Complex e3 = dx * dy * dz;
  Complex series = one - e2 / Float(10L, p) + e3 / Float(14L, p) + e2 * e2 / Float(24L, p) -
                   e2 * e3 * Float(3L, p) / Float(44L, p);
  Complex v = series / sqrt(mean);
  const double e = mag(v) * (eps * (it + 16) * 8.0) + x_in.err + y_in.err + z_in.err;
  return ArbComplex(std::move(v), e);
}

}  // namespace cmlab::mpnum

#include "cmlab/hyp/hyp3f2.hpp"

#include "cmlab/error.hpp"
#include "cmlab/mpnum/special.hpp"

#include <cmath>

namespace cmlab::hyp {

using mpnum::ArbReal;
using mpnum::Float;
using mpnum::PrecisionContext;

namespace {

bool nonpositive_integer(const mpq_class& q) { return q.get_den() == 1 && q <= 0; }

// Index at which the series terminates (some a_i = -k), or -1.
long terminating_index(const HypParams& p) {
  long stop = -1;
  for (const mpq_class* a : {&p.a1, &p.a2, &p.a3}) {
    if (!nonpositive_integer(*a)) continue;
    const long k = -a->get_num().get_si();
    if (stop < 0 || k < stop) stop = k;
  }
  return stop;
}

ArbReal finite_sum(const HypParams& p, long last, mpfr_prec_t bits) {
  mpq_class sum = 0, t = 1;
  for (long n = 0; n <= last; ++n) {
    sum += t;
    t *= term_ratio(p, n);
  }
  return ArbReal::from_rational(sum, bits);
}

}  // namespace

void HypParams::validate() const {
  if (nonpositive_integer(b1) || nonpositive_integer(b2)) {
    throw Error(Errc::pole, "3F2 lower parameter is a nonpositive integer");
  }
  if (terminating_index(*this) < 0 && margin() <= 0) {
    throw Error(Errc::divergence, "3F2(1) needs b1 + b2 - a1 - a2 - a3 > 0, got " + margin().get_str());
  }
}

mpq_class term_ratio(const HypParams& p, long n) {
  const mpq_class m(n);
  mpq_class r = (p.a1 + m) * (p.a2 + m) * (p.a3 + m) / ((p.b1 + m) * (p.b2 + m) * (m + 1));
  r.canonicalize();
  return r;
}

mpq_class term_exact(const HypParams& p, long n) {
  mpq_class t = 1;
  for (long k = 0; k < n; ++k) t *= term_ratio(p, k);
  return t;
}

std::vector<mpq_class> tail_coefficients(const HypParams& p, int k) {
  // log(t_n n^(1+s) / C) = sum_j l_j n^-j with
  // l_j = (-1)^(j+1) / (j(j+1)) * (sum_i B_{j+1}(a_i) - sum_i B_{j+1}(b_i) - B_{j+1}(1))
  std::vector<mpq_class> l(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j <= k; ++j) {
    using mpnum::bernoulli_poly;
    const mpq_class bsum = bernoulli_poly(j + 1, p.a1) + bernoulli_poly(j + 1, p.a2) + bernoulli_poly(j + 1, p.a3) -
                           bernoulli_poly(j + 1, p.b1) - bernoulli_poly(j + 1, p.b2) - bernoulli_poly(j + 1, 1);
    mpq_class lj = bsum / (mpq_class(j) * (j + 1));
    if (j % 2 == 0) lj = -lj;
    l[j] = lj;
  }
  // exp of the series: e_m = (1/m) sum_{j=1}^m j l_j e_{m-j}
  std::vector<mpq_class> e(static_cast<std::size_t>(k) + 1);
  e[0] = 1;
  for (int m = 1; m <= k; ++m) {
    mpq_class acc = 0;
    for (int j = 1; j <= m; ++j) acc += mpq_class(j) * l[j] * e[m - j];
    acc /= m;
    acc.canonicalize();
    e[m] = acc;
  }
  return e;
}

ArbReal f32_unit_split(const HypParams& p, long m, const PrecisionContext& ctx) {
  p.validate();
  const mpfr_prec_t bits = ctx.bits();
  if (const long stop = terminating_index(p); stop >= 0) return finite_sum(p, stop, bits);
  if (m < 1) throw Error(Errc::invalid_argument, "split point must be positive");

  const double unit = std::ldexp(1.0, -static_cast<int>(bits));
  // the head runs 32 bits wider so that M roundings stay below the target
  const mpfr_prec_t head_bits = bits + 32;
  const double head_unit = std::ldexp(1.0, -static_cast<int>(head_bits));
  Float head(0L, head_bits), term(1L, head_bits);
  double head_err = 0.0;
  for (long n = 0; n <= m; ++n) {
    head += term;
    // each ratio is one correctly rounded rational; errors compound linearly in n
    head_err += (std::fabs(term.to_double()) * static_cast<double>(2 * n + 2) + std::fabs(head.to_double())) * head_unit;
    term *= Float(term_ratio(p, n), head_bits);
  }

  const auto rat = [bits](const mpq_class& q) { return ArbReal::from_rational(q, bits); };
  using mpnum::gamma;
  const ArbReal c = gamma(rat(p.b1), ctx) * gamma(rat(p.b2), ctx) /
                    (gamma(rat(p.a1), ctx) * gamma(rat(p.a2), ctx) * gamma(rat(p.a3), ctx));
  const mpq_class s = p.margin();
  const ArbReal shift = ArbReal::exact(m + 1, bits);

  const double goal = std::fabs(head.to_double()) * unit;
  int k_max = 24;
  std::vector<mpq_class> d = tail_coefficients(p, k_max);
  ArbReal tail = ArbReal::exact(0, bits);
  double last = HUGE_VAL;
  int rises = 0;
  for (int i = 0;; ++i) {
    if (i > k_max) {
      if (k_max >= 192) break;
      k_max *= 2;
      d = tail_coefficients(p, k_max);
    }
    if (d[i] == 0) continue;
    const ArbReal zeta = mpnum::hurwitz_zeta(rat(s + 1 + i), shift, ctx);
    const ArbReal piece = c * rat(d[i]) * zeta;
    const double size = std::fabs(piece.to_double());
    // two consecutive rises: the asymptotic series has started to diverge
    if (size > last && ++rises >= 2) break;
    if (size <= last) rises = 0;
    tail = tail + piece;
    last = size;
    if (size < goal) {
      ArbReal total = ArbReal(head.with_prec(bits), head_err + unit * std::fabs(head.to_double())) + tail;
      // the first omitted term is smaller than this one by ~ i / (2 pi m)
      total.err += 2.0 * size;
      return total;
    }
  }
  throw Error(Errc::precision_unachievable, "3F2 tail expansion did not reach the target at M = " + std::to_string(m));
}

ArbReal f32_unit(const HypParams& p, const PrecisionContext& ctx) {
  p.validate();
  long m = std::max(200L, 25L * ctx.digits);
  for (;;) {
    try {
      ArbReal r = f32_unit_split(p, m, ctx);
      if (r.err > ctx.target() * std::fabs(r.to_double()) && r.to_double() != 0.0) {
        throw Error(Errc::precision_unachievable, "3F2 error estimate above target");
      }
      return r;
    } catch (const Error& e) {
      if (e.code() != Errc::precision_unachievable || 2 * m > ctx.max_terms) throw;
      m *= 2;
    }
  }
}

ArbReal ftilde(const FTildeArgs& args, const PrecisionContext& ctx) {
  const mpq_class sum = args.alpha + args.beta;
  if (nonpositive_integer(args.alpha) || nonpositive_integer(args.beta) || nonpositive_integer(sum)) {
    throw Error(Errc::pole, "F~ needs alpha, beta, alpha + beta outside the nonpositive integers");
  }
  const mpfr_prec_t bits = ctx.bits();
  const ArbReal b = mpnum::beta_fn(ArbReal::from_rational(args.alpha, bits), ArbReal::from_rational(args.beta, bits), ctx);
  const HypParams p{args.alpha, args.beta, sum - 1, sum, sum};
  return b * b * f32_unit(p, ctx);
}

ArbReal rhs_main(int curve_id, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const ArbReal pi(mpnum::const_pi(bits), std::ldexp(1.0, -static_cast<int>(bits)));
  if (curve_id == 36) {
    const ArbReal diff = ftilde({mpq_class(1, 2), mpq_class(1, 3)}, ctx) - ftilde({mpq_class(1, 2), mpq_class(2, 3)}, ctx);
    return diff / (ArbReal::exact(2, bits) * mpnum::sqrt(ArbReal::exact(3, bits)) * pi);
  }
  if (curve_id == 64) {
    const ArbReal diff = ftilde({mpq_class(1, 4), mpq_class(1, 4)}, ctx) - ftilde({mpq_class(3, 4), mpq_class(3, 4)}, ctx);
    return diff / (ArbReal::exact(8, bits) * pi);
  }
  throw Error(Errc::invalid_argument, "curve must be 36 or 64, got " + std::to_string(curve_id));
}

}  // namespace cmlab::hyp

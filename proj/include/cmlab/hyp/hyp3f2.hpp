#pragma once

#include "cmlab/mpnum/arb.hpp"

#include <gmpxx.h>

#include <vector>

namespace cmlab::hyp {

/// Parameters of 3F2(a1, a2, a3; b1, b2; 1).
struct HypParams {
  mpq_class a1, a2, a3, b1, b2;

  /// Convergence margin s = b1 + b2 - a1 - a2 - a3; the terms decay like n^-(1+s).
  mpq_class margin() const { return b1 + b2 - a1 - a2 - a3; }
  /// Throws Errc::pole for a nonpositive-integer b, Errc::divergence when margin <= 0.
  void validate() const;
};

struct FTildeArgs {
  mpq_class alpha, beta;
};

/// Exact term t_n = (a1)_n (a2)_n (a3)_n / ((b1)_n (b2)_n n!).
mpq_class term_exact(const HypParams& p, long n);
/// Exact ratio t_{n+1} / t_n.
mpq_class term_ratio(const HypParams& p, long n);

/// Coefficients d_0 = 1, d_1, ..., d_k of the large-n expansion
///   t_n = C n^-(1+s) (d_0 + d_1/n + d_2/n^2 + ...),
/// C = Gamma(b1)Gamma(b2) / (Gamma(a1)Gamma(a2)Gamma(a3)), obtained by
/// exponentiating the Bernoulli-polynomial expansion of the log-gamma ratio.
std::vector<mpq_class> tail_coefficients(const HypParams& p, int k);

/// 3F2 at unit argument: direct sum of t_0..t_M plus the tail
/// C sum_i d_i zeta(1+s+i, M+1). M and the number of tail terms follow ctx.
mpnum::ArbReal f32_unit(const HypParams& p, const mpnum::PrecisionContext& ctx);

/// Same sum with the split point M fixed by the caller.
mpnum::ArbReal f32_unit_split(const HypParams& p, long m, const mpnum::PrecisionContext& ctx);

/// (Gamma(a)Gamma(b)/Gamma(a+b))^2 * 3F2(a, b, a+b-1; a+b, a+b; 1).
mpnum::ArbReal ftilde(const FTildeArgs& args, const mpnum::PrecisionContext& ctx);

/// Hypergeometric side of the identity for conductor 36 or 64:
///   36: (F(1/2,1/3) - F(1/2,2/3)) / (2 sqrt(3) pi)
///   64: (F(1/4,1/4) - F(3/4,3/4)) / (8 pi)
mpnum::ArbReal rhs_main(int curve_id, const mpnum::PrecisionContext& ctx);

}  // namespace cmlab::hyp

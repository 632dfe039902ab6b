#pragma once

#include "cmlab/mpnum/arb.hpp"

#include <gmpxx.h>

namespace cmlab::mpnum {

/// Bernoulli number B_n (B_1 = -1/2), exact.
mpq_class bernoulli(int n);
/// Bernoulli polynomial B_n(x) at a rational point, exact.
mpq_class bernoulli_poly(int n, const mpq_class& x);

/// Gamma function by Stirling's series after an upward shift.
/// Throws Errc::pole at nonpositive integers.
ArbComplex gamma(const ArbComplex& z, const PrecisionContext& ctx);
ArbReal gamma(const ArbReal& x, const PrecisionContext& ctx);

/// Upper incomplete gamma Gamma(s, x) for real s and x >= 0.
/// s = 0 uses the E1 power series below x = 1 and a continued fraction above.
ArbReal upper_incomplete_gamma(const ArbReal& s, const ArbReal& x, const PrecisionContext& ctx);

/// Hurwitz zeta sum_{n>=0} (n+a)^-s for s > 1, a > 0 (Euler-Maclaurin).
ArbReal hurwitz_zeta(const ArbReal& s, const ArbReal& a, const PrecisionContext& ctx);

/// Arithmetic-geometric mean with the right choice of square root at every step.
ArbComplex agm(const ArbComplex& a, const ArbComplex& b, const PrecisionContext& ctx);

/// Beta function Gamma(a)Gamma(b)/Gamma(a+b).
ArbReal beta_fn(const ArbReal& a, const ArbReal& b, const PrecisionContext& ctx);

/// Carlson's symmetric integral R_F(x, y, z) for arguments off the negative real
/// axis (at most one of them zero).
ArbComplex carlson_rf(const ArbComplex& x, const ArbComplex& y, const ArbComplex& z,
                      const PrecisionContext& ctx);

}  // namespace cmlab::mpnum

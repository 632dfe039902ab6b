#pragma once

// Test-only reference integrator (double-exponential / tanh-sinh) used to
// produce independent expected values. Not linked into the library.

#include "cmlab/mpnum/float.hpp"

#include <functional>

namespace oracle {

using cmlab::mpnum::Float;

/// Integrand receiving x together with x - a and b - x, both computed without
/// cancellation, so endpoint singularities can be evaluated accurately.
using Integrand = std::function<Float(const Float& x, const Float& from_a, const Float& to_b)>;

/// Integral over [a, b]; the step is halved until two levels agree to 2^-bits.
Float tanh_sinh(const Integrand& f, const Float& a, const Float& b, mpfr_prec_t bits);

/// Integral over [a, infinity) via t = a + s/(1-s) mapped onto [0, 1).
Float tanh_sinh_to_infinity(const std::function<Float(const Float&)>& f, const Float& a, mpfr_prec_t bits);

}  // namespace oracle

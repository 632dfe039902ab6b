#include "oracle/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

using namespace cmlab::mpnum;

Float tanh_sinh(const Integrand& f, const Float& a, const Float& b, mpfr_prec_t bits) {
  const Float half_width = (b - a) / 2L;
  const Float mid = (a + b) / 2L;
  const Float half_pi = const_pi(bits) / 2L;
  const Float one(1L, bits);
  const double tol = std::ldexp(1.0, -static_cast<int>(bits) + 8);

  // Sum over nodes t = k h for k != 0 at step h, plus the centre node.
  auto level_sum = [&](const Float& h, long stride, long offset, Float& acc) {
    for (long k = offset;; k += stride) {
      const Float t = h * Float(k, bits);
      const Float u = half_pi * ((exp(t) - exp(-t)) / 2L);  // (pi/2) sinh t
      const Float cosh_t = (exp(t) + exp(-t)) / 2L;
      const Float cosh_u = (exp(u) + exp(-u)) / 2L;
      const Float weight = half_pi * cosh_t / (cosh_u * cosh_u);
      const Float comp = exp(-u) / cosh_u;  // 1 - tanh(u)
      if (comp.is_zero()) break;
      const Float near_b = half_width * comp;            // b - x for x = mid + hw tanh u
      const Float near_a = half_width * (Float(2L, bits) - comp);
      const Float right = f(b - near_b, near_a, near_b);
      const Float left = f(a + near_b, near_b, near_a);  // mirrored node
      const Float term = weight * (right + left);
      acc += term;
      // endpoint singularities make f grow, so stop on the term, not the weight
      const double cut = std::ldexp(std::max(1.0, std::fabs(acc.to_double())), -static_cast<int>(bits) - 20);
      if (std::fabs(weight.to_double()) * (std::fabs(right.to_double()) + std::fabs(left.to_double())) < cut) break;
    }
  };

  Float h(1L, bits);
  Float sum = half_pi * f(mid, half_width, half_width);
  level_sum(h, 1, 1, sum);
  Float estimate = sum * h * half_width;
  for (int level = 1; level <= 14; ++level) {
    h /= 2L;
    level_sum(h, 2, 1, sum);  // only the new odd nodes
    Float next = sum * h * half_width;
    const double diff = abs(next - estimate).to_double();
    estimate = std::move(next);
    if (diff <= tol * std::max(1.0, std::fabs(estimate.to_double()))) return estimate;
  }
  throw std::runtime_error("tanh_sinh did not converge");
}

Float tanh_sinh_to_infinity(const std::function<Float(const Float&)>& f, const Float& a, mpfr_prec_t bits) {
  // t = a + s/(1-s), dt = ds/(1-s)^2
  const Float one(1L, bits);
  Integrand g = [&](const Float& s, const Float&, const Float& one_minus_s) {
    if (one_minus_s.is_zero()) return Float(0L, bits);
    const Float t = a + s / one_minus_s;
    return f(t) / (one_minus_s * one_minus_s);
  };
  return tanh_sinh(g, Float(0L, bits), one, bits);
}

}  // namespace oracle

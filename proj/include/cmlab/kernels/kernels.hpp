#pragma once

// Integer-exact and fixed-order floating kernels with an OpenMP version and a
// serial reference. Both versions return bit-identical results: floating sums
// are split into a fixed number of chunks independent of the thread count and
// the chunk sums are combined in index order.

#include <cstdint>
#include <vector>

namespace cmlab::kernels {

enum class Exec { serial, parallel };

/// Number of chunks used by the floating reductions.
inline constexpr int kChunks = 64;

/// Primes p <= limit, ascending.
std::vector<long> primes_up_to(long limit);

/// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<std::int32_t> smallest_prime_factors(long limit);

/// -sum_{x in F_p} legendre(x^3 + a x + b, p), i.e. p + 1 - #E(F_p), by exhaustive
/// enumeration. Requires p an odd prime.
long trace_by_enumeration(long a, long b, long p);

/// trace_by_enumeration for every prime in `primes`.
std::vector<long> traces_by_enumeration(long a, long b, const std::vector<long>& primes, Exec exec);

/// sum_{n=1}^{coeffs.size()-1} coeffs[n] / n^s in long double (coeffs[0] ignored).
long double dirichlet_partial_sum(const std::vector<long>& coeffs, long double s, Exec exec);

}  // namespace cmlab::kernels

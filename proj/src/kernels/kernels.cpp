#include "cmlab/kernels/kernels.hpp"

#include "cmlab/error.hpp"

#include <array>
#include <cmath>

namespace cmlab::kernels {

std::vector<std::int32_t> smallest_prime_factors(long limit) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(std::max(limit, 1L)) + 1, 0);
  for (long i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (long j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
  }
  return spf;
}

std::vector<long> primes_up_to(long limit) {
  std::vector<long> out;
  const auto spf = smallest_prime_factors(limit);
  for (long i = 2; i <= limit; ++i) {
    if (spf[i] == i) out.push_back(i);
  }
  return out;
}

long trace_by_enumeration(long a, long b, long p) {
  if (p < 3) throw Error(Errc::invalid_argument, "enumeration needs an odd prime");
  std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
  const long am = ((a % p) + p) % p, bm = ((b % p) + p) % p;
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    const long rhs = ((x * x % p * x) % p + am * x % p + bm) % p;
    sum += chi[static_cast<std::size_t>(rhs)];
  }
  return -sum;
}

std::vector<long> traces_by_enumeration(long a, long b, const std::vector<long>& primes, Exec exec) {
  std::vector<long> out(primes.size());
  const long n = static_cast<long>(primes.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) out[i] = trace_by_enumeration(a, b, primes[i]);
  } else {
    for (long i = 0; i < n; ++i) out[i] = trace_by_enumeration(a, b, primes[i]);
  }
  return out;
}

long double dirichlet_partial_sum(const std::vector<long>& coeffs, long double s, Exec exec) {
  const long n = static_cast<long>(coeffs.size()) - 1;
  std::array<long double, kChunks> partial{};
  const auto chunk = [&](int c) {
    const long lo = 1 + n * c / kChunks, hi = 1 + n * (c + 1) / kChunks;
    long double acc = 0;
    for (long k = lo; k < hi; ++k) {
      if (coeffs[k] != 0) acc += coeffs[k] * std::pow(static_cast<long double>(k), -s);
    }
    partial[c] = acc;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int c = 0; c < kChunks; ++c) chunk(c);
  } else {
    for (int c = 0; c < kChunks; ++c) chunk(c);
  }
  long double total = 0;
  for (long double x : partial) total += x;
  return total;
}

}  // namespace cmlab::kernels

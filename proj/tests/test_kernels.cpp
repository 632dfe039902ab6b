#include "doctest.h"

#include "cmlab/kernels/kernels.hpp"

#include <cstring>

using namespace cmlab::kernels;

TEST_CASE("prime sieve") {
  const auto p = primes_up_to(30);
  CHECK(p == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  const auto spf = smallest_prime_factors(12);
  CHECK(spf[12] == 2);
  CHECK(spf[9] == 3);
  CHECK(spf[11] == 11);
}

TEST_CASE("parallel point counting equals the serial reference") {
  const auto primes = primes_up_to(3000);
  std::vector<long> odd(primes.begin() + 1, primes.end());
  const auto s = traces_by_enumeration(-4, 0, odd, Exec::serial);
  const auto q = traces_by_enumeration(-4, 0, odd, Exec::parallel);
  CHECK(s == q);
  CHECK(s[1] == 2);  // p = 5
}

TEST_CASE("chunked Dirichlet sum is bit-identical across execution modes") {
  std::vector<long> a(100001);
  for (std::size_t n = 1; n < a.size(); ++n) a[n] = static_cast<long>(n % 7) - 3;
  const long double s = dirichlet_partial_sum(a, 2.0L, Exec::serial);
  const long double q = dirichlet_partial_sum(a, 2.0L, Exec::parallel);
  CHECK(std::memcmp(&s, &q, 10) == 0);
  std::vector<long> one{0, 1};
  CHECK(dirichlet_partial_sum(one, 2.0L, Exec::parallel) == 1.0L);
}

#include "cmlab/hecke/hecke.hpp"

#include "cmlab/error.hpp"
#include "cmlab/kernels/kernels.hpp"
#include "cmlab/mpnum/special.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>

namespace cmlab::hecke {

using mpnum::ArbReal;
using mpnum::Float;
using mpnum::PrecisionContext;

CurveId CurveId::e36() { return CurveId{36, 0, 1, {2, 3}, 1}; }
CurveId CurveId::e64() { return CurveId{64, -4, 0, {2}, 1}; }

CurveId CurveId::from_conductor(int n) {
  if (n == 36) return e36();
  if (n == 64) return e64();
  throw Error(Errc::invalid_argument, "conductor must be 36 or 64, got " + std::to_string(n));
}

bool CurveId::is_bad(long p) const { return std::find(bad_primes.begin(), bad_primes.end(), p) != bad_primes.end(); }

std::string to_string(CoeffSource s) {
  switch (s) {
    case CoeffSource::pointcount: return "pointcount";
    case CoeffSource::cm: return "cm";
    case CoeffSource::file: return "file";
    case CoeffSource::eta: return "eta";
  }
  return "?";
}

CoeffSource source_from_string(const std::string& name) {
  for (auto s : {CoeffSource::pointcount, CoeffSource::cm, CoeffSource::file, CoeffSource::eta}) {
    if (to_string(s) == name) return s;
  }
  throw Error(Errc::invalid_argument, "unknown coefficient source '" + name + "'");
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_good(const CurveId& c, long p) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
  if (c.is_bad(p)) throw Error(Errc::bad_prime, std::to_string(p) + " is a bad prime for conductor " + std::to_string(c.conductor));
}

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

long mod(long x, long m) { return ((x % m) + m) % m; }

// Z[i], conductor (4): the associate alpha = a + bi of a prime above p with
// alpha = 1 or 1 - 2i (mod 4), i.e. a = 1 (mod 4) and b even. Then
// chi((alpha)) = conj(alpha) and a_p = 2a.
long ap_gaussian(long p) {
  if (p % 4 == 3) return 0;
  const long r = isqrt(p);
  for (long a = -r; a <= r; ++a) {
    const long b2 = p - a * a;
    const long b = isqrt(b2);
    if (b * b == b2 && b % 2 == 0 && mod(a, 4) == 1) return 2 * a;
  }
  throw Error(Errc::consistency, "no normalized Gaussian generator above " + std::to_string(p));
}

// Z[w], w = zeta_3, conductor (2(1 - w)): the associate pi = c + d w with
// pi = 1 (mod 2(1 - w)); (pi - 1)(2(1 - w^2)) / 12 integral reduces to
// 2c' - d = 0 and c' + d = 0 (mod 6) for c' = c - 1. Then a_p = Tr pi = 2c - d.
long ap_eisenstein(long p) {
  if (p % 3 == 2) return 0;
  const long r = 2 * isqrt(p) + 2;
  for (long c = -r; c <= r; ++c) {
    for (long d = -r; d <= r; ++d) {
      if (c * c - c * d + d * d != p) continue;
      const long c1 = c - 1;
      if (mod(2 * c1 - d, 6) == 0 && mod(c1 + d, 6) == 0) return 2 * c - d;
    }
  }
  throw Error(Errc::consistency, "no normalized Eisenstein generator above " + std::to_string(p));
}

// Extend prime values a_p (indexed by p) to all n <= n_max.
std::vector<long> extend_multiplicative(const CurveId& c, const std::vector<long>& ap, long n_max) {
  const auto spf = kernels::smallest_prime_factors(n_max);
  std::vector<long> a(static_cast<std::size_t>(n_max) + 1, 0);
  if (n_max >= 1) a[1] = 1;
  for (long n = 2; n <= n_max; ++n) {
    const long p = spf[n];
    long pk = p, m = n / p;
    while (m % p == 0) {
      pk *= p;
      m /= p;
    }
    if (m > 1) {
      a[n] = a[pk] * a[m];
    } else if (pk == p) {
      a[n] = c.is_bad(p) ? 0 : ap[p];
    } else {
      a[n] = c.is_bad(p) ? 0 : a[p] * a[pk / p] - p * a[pk / (p * p)];
    }
  }
  return a;
}

// deterministic 1% sample of coprime pairs (m, k) with m k <= n_max
std::string sample_multiplicativity(const std::vector<long>& a, long n_max) {
  std::mt19937_64 rng(n_max);
  const long samples = std::max(1L, n_max / 100);
  for (long s = 0; s < samples && n_max >= 6; ++s) {
    std::uniform_int_distribution<long> dm(2, std::max(2L, isqrt(n_max)));
    const long m = dm(rng);
    std::uniform_int_distribution<long> dk(2, std::max(2L, n_max / m));
    const long k = dk(rng);
    if (m * k > n_max || std::gcd(m, k) != 1) continue;
    if (a[m * k] != a[m] * a[k]) {
      return "a_" + std::to_string(m * k) + " != a_" + std::to_string(m) + " * a_" + std::to_string(k);
    }
  }
  return {};
}

}  // namespace

long ap_pointcount(const CurveId& c, long p) {
  require_good(c, p);
  return kernels::trace_by_enumeration(c.a, c.b, p);
}

long ap_cm(const CurveId& c, long p) {
  require_good(c, p);
  return c.conductor == 64 ? ap_gaussian(p) : ap_eisenstein(p);
}

std::vector<long> eta_product_36(long n_max) {
  // prod (1 - q^{6n})^4 to q^{n_max - 1}, then shift by q
  std::vector<long> series(static_cast<std::size_t>(std::max(n_max, 1L)), 0);
  series[0] = 1;
  const long len = static_cast<long>(series.size());
  for (long step = 6; step < len; step += 6) {
    for (int rep = 0; rep < 4; ++rep) {
      for (long k = len - 1; k >= step; --k) series[k] -= series[k - step];
    }
  }
  std::vector<long> out(static_cast<std::size_t>(n_max) + 1, 0);
  for (long n = 1; n <= n_max; ++n) out[n] = series[n - 1];
  return out;
}

CoeffTable read_coeff_file(const CurveId& c, std::istream& in) {
  (void)c;
  CoeffTable t;
  t.source = CoeffSource::file;
  t.a.push_back(0);
  std::string line;
  long line_no = 0;
  bool trailing_blank = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      trailing_blank = true;
      continue;
    }
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (trailing_blank) throw Error(Errc::file_format, where + "blank line inside coefficient data");
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(Errc::file_format, where + "expected 'n,a_n'");
    long n = 0, v = 0;
    const auto parse = [&](const char* first, const char* last, long& out) {
      while (first < last && *first == ' ') ++first;
      while (last > first && (last[-1] == ' ' || last[-1] == '\t')) --last;
      const auto r = std::from_chars(first, last, out);
      if (r.ec != std::errc() || r.ptr != last) throw Error(Errc::file_format, where + "bad integer in '" + line + "'");
    };
    parse(line.data(), line.data() + comma, n);
    parse(line.data() + comma + 1, line.data() + line.size(), v);
    if (n != static_cast<long>(t.a.size())) {
      throw Error(Errc::file_format, where + "expected n = " + std::to_string(t.a.size()) + ", got " + std::to_string(n));
    }
    t.a.push_back(v);
  }
  t.n_max = static_cast<long>(t.a.size()) - 1;
  if (t.n_max < 1) throw Error(Errc::file_format, "empty coefficient file");
  if (t.a[1] != 1) throw Error(Errc::inconsistency, "a_1 must be 1");
  if (auto msg = sample_multiplicativity(t.a, t.n_max); !msg.empty()) throw Error(Errc::inconsistency, msg);
  return t;
}

void write_coeff_file(const CoeffTable& t, std::ostream& out) {
  for (long n = 1; n <= t.n_max; ++n) out << n << ',' << t.a[n] << '\n';
}

CoeffTable build_coeffs(const CurveId& c, long n_max, CoeffSource source, const std::string& path) {
  if (n_max < 1) throw Error(Errc::invalid_argument, "n_max must be at least 1");
  CoeffTable t;
  t.n_max = n_max;
  t.source = source;
  switch (source) {
    case CoeffSource::file: {
      std::ifstream in(path);
      if (!in) throw Error(Errc::file_format, "cannot open coefficient file '" + path + "'");
      CoeffTable f = read_coeff_file(c, in);
      if (f.n_max < n_max) {
        throw Error(Errc::insufficient_coefficients,
                    "file has " + std::to_string(f.n_max) + " coefficients, need " + std::to_string(n_max));
      }
      f.a.resize(static_cast<std::size_t>(n_max) + 1);
      f.n_max = n_max;
      return f;
    }
    case CoeffSource::eta: {
      if (c.conductor != 36) throw Error(Errc::invalid_argument, "the eta-product generator exists for conductor 36 only");
      t.a = eta_product_36(n_max);
      // validated against point counts before use
      const auto primes = kernels::primes_up_to(std::min(n_max, 2000L));
      for (long p : primes) {
        if (c.is_bad(p)) continue;
        if (t.a[p] != ap_pointcount(c, p)) {
          throw Error(Errc::inconsistency, "eta-product coefficient disagrees with point count at p = " + std::to_string(p));
        }
      }
      return t;
    }
    case CoeffSource::cm:
    case CoeffSource::pointcount: {
      const auto primes = kernels::primes_up_to(n_max);
      std::vector<long> ap(static_cast<std::size_t>(n_max) + 1, 0);
      if (source == CoeffSource::cm) {
        for (long p : primes) ap[p] = c.is_bad(p) ? 0 : ap_cm(c, p);
      } else {
        std::vector<long> good;
        for (long p : primes) {
          if (!c.is_bad(p)) good.push_back(p);
        }
        const auto traces = kernels::traces_by_enumeration(c.a, c.b, good, kernels::Exec::parallel);
        for (std::size_t i = 0; i < good.size(); ++i) ap[good[i]] = traces[i];
      }
      t.a = extend_multiplicative(c, ap, n_max);
      return t;
    }
  }
  throw Error(Errc::invalid_argument, "unknown coefficient source");
}

std::string check_invariants(const CurveId& c, const CoeffTable& t) {
  const auto& a = t.a;
  if (t.n_max < 1 || static_cast<long>(a.size()) != t.n_max + 1) return "table length does not match n_max";
  if (a[1] != 1) return "a_1 != 1";
  const auto spf = kernels::smallest_prime_factors(t.n_max);
  for (long n = 2; n <= t.n_max; ++n) {
    const long p = spf[n];
    long pk = p, m = n / p;
    while (m % p == 0) {
      pk *= p;
      m /= p;
    }
    if (m > 1) {
      if (a[n] != a[pk] * a[m]) return "multiplicativity fails at n = " + std::to_string(n);
      continue;
    }
    if (c.is_bad(p)) {
      if (a[n] != 0) return "nonzero coefficient at bad prime power " + std::to_string(n);
      continue;
    }
    if (pk == p) {
      if (static_cast<double>(a[p] * a[p]) > 4.0 * static_cast<double>(p)) return "Hasse bound fails at p = " + std::to_string(p);
    } else if (a[n] != a[p] * a[pk / p] - p * a[pk / (p * p)]) {
      return "prime-power recursion fails at n = " + std::to_string(n);
    }
  }
  return {};
}

long required_terms(const CurveId& c, const PrecisionContext& ctx) {
  const double scale = std::sqrt(static_cast<double>(c.conductor)) / (2.0 * M_PI);
  return static_cast<long>(std::ceil(scale * (ctx.digits * std::log(10.0) + 5.0)));
}

ArbReal l_two(const CurveId& c, const CoeffTable& t, const PrecisionContext& ctx) {
  const long need = required_terms(c, ctx);
  if (t.n_max < need) {
    throw Error(Errc::insufficient_coefficients,
                "l_two needs " + std::to_string(need) + " coefficients, table has " + std::to_string(t.n_max));
  }
  const mpfr_prec_t bits = ctx.bits();
  const Float pi = mpnum::const_pi(bits);
  const Float root_n = mpnum::sqrt(Float(static_cast<long>(c.conductor), bits));
  const Float step = pi * 2L / root_n;   // x_n = n * step
  const Float weight0 = step * step;     // (2 pi / sqrt N)^2
  const double w = c.root_number;
  const ArbReal two = ArbReal::exact(2, bits), zero = ArbReal::exact(0, bits);

  // working cutoff: terms beyond it are below 2^-bits
  const double step_d = step.to_double();
  const long cutoff = std::min(t.n_max, static_cast<long>(std::ceil((bits * std::log(2.0) + 10.0) / step_d)) + 1);

  ArbReal sum = zero;
  for (long n = 1; n <= cutoff; ++n) {
    if (t.a[n] == 0) continue;
    const ArbReal x(step * n, 0.0);
    const ArbReal g2 = mpnum::upper_incomplete_gamma(two, x, ctx);
    const ArbReal g0 = mpnum::upper_incomplete_gamma(zero, x, ctx);
    const ArbReal inv_n2 = ArbReal(Float(1L, bits) / Float(n * n, bits), 0.0);
    const ArbReal term = g2 * inv_n2 + ArbReal(weight0, 0.0) * g0 * ArbReal(Float(w, bits), 0.0);
    sum = sum + term * ArbReal::exact(t.a[n], bits);
  }
  // omitted tail, with |a_n| <= n as a crude bound
  double tail = 0.0;
  const double w0 = weight0.to_double();
  for (long n = cutoff + 1;; ++n) {
    const double x = step_d * static_cast<double>(n);
    const double term = static_cast<double>(n) * (std::exp(-x) * (1.0 + x) / (static_cast<double>(n) * n) + w0 * std::exp(-x) / x);
    tail += term;
    if (term < 1e-300 || term < tail * 1e-17) break;
  }
  sum.err += tail;
  return sum;
}

ArbReal lstar_zero(const CurveId& c, const CoeffTable& t, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const Float two_pi = mpnum::const_pi(bits) * 2L;
  const ArbReal factor(Float(static_cast<long>(c.conductor), bits) / (two_pi * two_pi), 0.0);
  return factor * l_two(c, t, ctx);
}

ArbReal lstar_zero(const CurveId& c, const PrecisionContext& ctx) {
  const long n = required_terms(c, ctx.raised(ctx.guard)) + 10;
  return lstar_zero(c, build_coeffs(c, n, CoeffSource::cm), ctx);
}

}  // namespace cmlab::hecke

#include "cmlab/cyclo/cyclonum.hpp"

#include "cmlab/core/expr.hpp"
#include "cmlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace cmlab::cyclo {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending coefficients, no trailing zeros

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Fold z^k (k >= 8) down using z^8 = z^4 - 1.
std::array<mpq_class, CycloNum::kDegree> reduce(QPoly p) {
  for (std::size_t k = p.size(); k-- > CycloNum::kDegree;) {
    if (p[k] == 0) continue;
    p[k - 4] += p[k];
    p[k - 8] -= p[k];
    p[k] = 0;
  }
  std::array<mpq_class, CycloNum::kDegree> out{};
  for (std::size_t k = 0; k < p.size() && k < out.size(); ++k) out[k] = p[k];
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    const mpq_class f = r.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= f * b[k];
    trim(r);
  }
  trim(q);
}

const QPoly& phi24() {
  static const QPoly p{1, 0, 0, 0, -1, 0, 0, 0, 1};
  return p;
}

}  // namespace

CycloNum::CycloNum(long n) { c_[0] = n; }

CycloNum::CycloNum(const mpq_class& q) { c_[0] = q; }

CycloNum::CycloNum(const std::array<mpq_class, kDegree>& coeffs) : c_(coeffs) {
  for (auto& x : c_) x.canonicalize();
}

CycloNum CycloNum::zeta(long k) {
  k %= kOrder;
  if (k < 0) k += kOrder;
  QPoly p(static_cast<std::size_t>(k) + 1);
  p[static_cast<std::size_t>(k)] = 1;
  CycloNum r;
  r.c_ = reduce(std::move(p));
  return r;
}

CycloNum CycloNum::sqrt2() { return zeta(3) + zeta(21); }
CycloNum CycloNum::sqrt3() { return zeta(2) + zeta(22); }
CycloNum CycloNum::sqrt_minus3() { return zeta(8) * 2L + 1L; }

bool CycloNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool CycloNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; });
}

mpq_class CycloNum::rational() const {
  if (!is_rational()) throw Error(Errc::invalid_argument, "not a rational number: " + str());
  return c_[0];
}

mpz_class CycloNum::denominator() const {
  mpz_class d = 1;
  for (const auto& x : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  for (int k = 0; k < kDegree; ++k) c_[k] += o.c_[k];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  for (int k = 0; k < kDegree; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  QPoly p(2 * kDegree - 1);
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < kDegree; ++j) p[i + j] += c_[i] * o.c_[j];
  }
  c_ = reduce(std::move(p));
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inv(); }

std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b) {
  for (int k = 0; k < CycloNum::kDegree; ++k) {
    const int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero in Q(zeta_24)");
  if (is_rational()) return CycloNum(mpq_class(1) / c_[0]);
  // s*x + t*Phi = g with g a nonzero constant since Phi is irreducible
  QPoly r0 = phi24(), r1(c_.begin(), c_.end());
  trim(r1);
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    QPoly q, rem;
    divmod(r0, r1, q, rem);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const mpq_class g = r1.at(0);
  for (auto& x : s1) x /= g;
  CycloNum out;
  out.c_ = reduce(std::move(s1));
  return out;
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloNum result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

CycloNum CycloNum::conj_auto(long k) const {
  if (std::gcd(k, static_cast<long>(kOrder)) != 1) {
    throw Error(Errc::invalid_argument, "conj_auto needs k coprime to 24, got " + std::to_string(k));
  }
  CycloNum r;
  for (int j = 0; j < kDegree; ++j) {
    if (c_[j] != 0) r += zeta(k * j) * c_[j];
  }
  return r;
}

mpq_class CycloNum::norm() const {
  CycloNum prod(1L);
  for (long k : {1L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) prod *= conj_auto(k);
  return prod.rational();
}

mpnum::ArbComplex CycloNum::embed(const mpnum::PrecisionContext& ctx) const {
  using namespace mpnum;
  const mpfr_prec_t p = ctx.bits();
  const Float angle = const_pi(p) / 12L;
  const Complex z(cos(angle), sin(angle));
  Complex acc(p);
  double weight = 0.0;
  for (int k = kDegree; k-- > 0;) {
    acc = acc * z + Complex(Float(c_[k], p));
    weight += std::fabs(c_[k].get_d());
  }
  const double err = (weight + 1.0) * 16.0 * std::ldexp(1.0, -static_cast<int>(p));
  return ArbComplex(std::move(acc), err);
}

std::string CycloNum::str() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < kDegree; ++k) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z";
    if (k > 1) out << "^" << k;
  }
  return first ? "0" : out.str();
}

CycloNum CycloNum::parse(std::string_view text) {
  expr::Hooks<CycloNum> hooks;
  hooks.number = [](const mpq_class& q) { return CycloNum(q); };
  hooks.identifier = [](const std::string& name) -> CycloNum {
    if (name == "z") return zeta(1);
    if (name == "i") return CycloNum::i();
    if (name == "w") return zeta3();
    if (name == "sqrt2") return sqrt2();
    if (name == "sqrt3") return sqrt3();
    throw Error(Errc::parse, "unknown constant '" + name + "'");
  };
  hooks.power = [](const CycloNum& b, long e) { return b.pow(e); };
  hooks.divide = [](const CycloNum& a, const CycloNum& b) { return a / b; };
  return expr::parse(text, hooks);
}

}  // namespace cmlab::cyclo

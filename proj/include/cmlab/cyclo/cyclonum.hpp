#pragma once

#include "cmlab/mpnum/arb.hpp"

#include <gmpxx.h>

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace cmlab::cyclo {

/// Exact element of Q(zeta_24), stored as sum_{k<8} c_k z^k reduced modulo
/// Phi_24(z) = z^8 - z^4 + 1, with z embedded as exp(2 pi i / 24).
class CycloNum {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kOrder = 24;

  CycloNum() = default;
  CycloNum(long n);  // NOLINT: implicit on purpose, integers are field elements
  CycloNum(const mpq_class& q);  // NOLINT
  explicit CycloNum(const std::array<mpq_class, kDegree>& coeffs);

  /// z^k for any integer k.
  static CycloNum zeta(long k = 1);
  static CycloNum i() { return zeta(6); }
  static CycloNum zeta3() { return zeta(8); }
  static CycloNum zeta8() { return zeta(3); }
  static CycloNum sqrt2();
  static CycloNum sqrt3();
  static CycloNum sqrt_minus3();

  const mpq_class& coeff(int k) const { return c_[k]; }
  const std::array<mpq_class, kDegree>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws Errc::invalid_argument if not rational.
  mpq_class rational() const;
  /// Product of all denominators' lcm, the smallest d with d*x integral in Z[z].
  mpz_class denominator() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c_ == b.c_; }
  /// Lexicographic on (c_0, ..., c_7).
  friend std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b);

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_24.
  CycloNum inv() const;
  CycloNum pow(long e) const;

  /// Galois automorphism z -> z^k, gcd(k, 24) = 1.
  CycloNum conj_auto(long k) const;
  /// Complex conjugation, sigma_{-1}.
  CycloNum conj() const { return conj_auto(-1); }
  /// Norm down to Q: product of all eight conjugates.
  mpq_class norm() const;

  mpnum::ArbComplex embed(const mpnum::PrecisionContext& ctx) const;

  /// "c0 + c1*z + ... + c7*z^7" with zero terms omitted; "0" for zero.
  std::string str() const;
  /// Accepts any arithmetic expression in z and the named constants
  /// i, w (= zeta_3), sqrt2, sqrt3.
  static CycloNum parse(std::string_view text);

 private:
  std::array<mpq_class, kDegree> c_{};
};

}  // namespace cmlab::cyclo

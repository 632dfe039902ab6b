#pragma once

#include "cmlab/cyclo/cyclonum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cmlab::ksym {

using cyclo::CycloNum;

/// Univariate polynomial over Q(zeta_24), ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const CycloNum& c);  // NOLINT
  Poly(long c) : Poly(CycloNum(c)) {}  // NOLINT
  explicit Poly(std::vector<CycloNum> coeffs);

  static Poly var() { return monomial(1, 1); }
  static Poly monomial(const CycloNum& c, int n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Coefficient of t^k, zero outside the stored range.
  CycloNum coeff(int k) const;
  const CycloNum& lead() const { return c_.back(); }
  const std::vector<CycloNum>& coeffs() const { return c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Quotient and remainder; throws Errc::division_by_zero for b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd (zero when both are zero).
  static Poly gcd(Poly a, Poly b);

  Poly monic() const;
  Poly pow(int e) const;
  Poly derivative() const;
  CycloNum eval(const CycloNum& x) const;
  /// p(c t).
  Poly scale_var(const CycloNum& c) const;
  /// p(q(t)).
  Poly compose(const Poly& q) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<CycloNum> c_;
};

/// Reduced fraction num/den with monic den.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const CycloNum& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
  /// Value when constant.
  CycloNum constant() const { return num_.coeff(0); }

  RatFunc operator-() const { return {-num_, den_}; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc inv() const;
  RatFunc pow(long e) const;
  RatFunc scale_var(const CycloNum& c) const { return {num_.scale_var(c), den_.scale_var(c)}; }
  /// Composition with a rational function.
  RatFunc compose(const RatFunc& q) const;

  std::string str(const std::string& var = "t") const;

 private:
  Poly num_, den_;
};

}  // namespace cmlab::ksym

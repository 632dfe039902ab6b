#pragma once

#include "cmlab/ksym/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cmlab::ksym {

enum class CurveTag { fermat4, fermat6, e36, e64, interC };

std::string to_string(CurveTag tag);
/// Accepts the names printed by to_string; throws Errc::invalid_argument.
CurveTag curve_from_string(const std::string& name);

/// Plane curve w^d = h(t). The function field is K(t)[w] / (w^d - h) with
/// K = Q(zeta_24).
struct RadicalCurve {
  CurveTag tag;
  int d;
  Poly h;
  std::string t_name, w_name;

  /// e36: v^2 = u^3 + 1; e64: v^2 = u^3 - 4u; fermatN: y^N = 1 - x^N; interC: v^2 = 1 - y^6.
  static const RadicalCurve& get(CurveTag tag);
};

/// Element sum_{k<d} c_k(t) w^k of the function field of a radical curve.
class FFElem {
 public:
  FFElem() = default;
  FFElem(CurveTag tag, const RatFunc& c);
  FFElem(CurveTag tag, std::vector<RatFunc> coeffs);

  static FFElem t(CurveTag tag);
  static FFElem w(CurveTag tag);
  static FFElem constant(CurveTag tag, const CycloNum& c) { return {tag, RatFunc(c)}; }

  CurveTag tag() const { return tag_; }
  const RadicalCurve& curve() const { return RadicalCurve::get(tag_); }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  const RatFunc& coeff(int k) const { return c_[k]; }

  bool is_zero() const;
  /// True when only c_0 is nonzero.
  bool in_base() const;
  bool is_constant() const;

  FFElem operator-() const;
  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inv(); }
  friend bool operator==(const FFElem& a, const FFElem& b);

  /// Throws Errc::division_by_zero.
  FFElem inv() const;
  FFElem pow(long e) const;

  /// The automorphism t -> t, w -> zeta_d^j w.
  FFElem conj(int j) const;
  /// Norm to K(t): the product of all d conjugates.
  RatFunc norm() const;
  /// Substitution t -> alpha t, w -> beta w. Requires h(alpha t) = beta^d h(t);
  /// throws Errc::invalid_argument otherwise.
  FFElem apply_diag(const CycloNum& alpha, const CycloNum& beta) const;

  std::string str() const;

 private:
  CurveTag tag_ = CurveTag::e36;
  std::vector<RatFunc> c_;
};

/// r(x) for x in the function field.
FFElem evaluate(const RatFunc& r, const FFElem& x);
FFElem evaluate(const Poly& p, const FFElem& x);

/// Parses an expression in the curve's variables (u, v for elliptic curves; x, y for
/// Fermat curves; y, v for interC) with cyclotomic constants.
FFElem parse_function(CurveTag tag, std::string_view text);

}  // namespace cmlab::ksym

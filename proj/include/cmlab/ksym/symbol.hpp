#pragma once

#include "cmlab/ksym/field.hpp"
#include "cmlab/ksym/local.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmlab::ksym {

/// Steinberg symbol {f, g} of two nonzero functions on one curve.
struct Symbol {
  FFElem f, g;

  Symbol() = default;
  /// Throws Errc::invalid_argument for a zero entry or mismatched curves.
  Symbol(FFElem f, FFElem g);

  friend bool operator==(const Symbol&, const Symbol&) = default;
  std::string str() const;
};

struct SymbolTerm {
  long coeff = 1;
  Symbol sym;
  friend bool operator==(const SymbolTerm&, const SymbolTerm&) = default;
};

using SymbolSum = std::vector<SymbolTerm>;
std::string str(const SymbolSum& s);

/// One step of an explicit rewriting.
struct Move {
  std::string rule;
  SymbolSum result;
};

/// k{a, b} -> (-k){1/a, b}.
SymbolSum invert_first(const SymbolSum& s, std::size_t index);
/// k{a, b} -> (-k){b, a}.
SymbolSum swap_slots(const SymbolSum& s, std::size_t index);
/// Removes a term {a, 1 - a} or {a, -a}; throws Errc::invalid_argument if it is neither.
SymbolSum drop_steinberg(const SymbolSum& s, std::size_t index);

/// Tries to rewrite `a` into `b` using first-slot inversion and slot swapping on single
/// terms. Returns the moves on success.
std::optional<std::vector<Move>> rewrite_to(const SymbolSum& a, const SymbolSum& b);

/// Rational map from a cover to a quotient curve, given by the images of the quotient's
/// coordinates t, w in the cover's function field.
struct CurveMap {
  CurveTag base, cover;
  FFElem t_image, w_image;
  std::string name;

  /// Throws Errc::consistency unless w_image^d = h(t_image) on the cover.
  void validate() const;

  /// x^6 + y^6 = 1 -> v^2 = u^3 + 1, (u, v) = (-y^2, x^3).
  static CurveMap e36_from_fermat6();
  /// x^4 + y^4 = 1 -> v^2 = u^3 - 4u, (u, v) = (2(y^2 + 1)/x^2, 4y(y^2 + 1)/x^3).
  static CurveMap e64_from_fermat4();
  /// x^6 + y^6 = 1 -> v^2 + y^6 = 1, (y, v) = (y, x^3).
  static CurveMap interC_from_fermat6();
  /// v^2 + y^6 = 1 -> v^2 = u^3 + 1, (u, v) = (-y^2, v).
  static CurveMap e36_from_interC();
};

/// Pullback of f along the map. Throws Errc::invalid_argument if f is not on the base.
FFElem substitute_quotient(const CurveMap& map, const FFElem& f);

/// prod_{j<d} f(var -> zeta_d^j var), var = the curve's t (twist_w false) or w.
/// Throws Errc::subfield_membership if the product is not fixed by the twist.
FFElem kummer_norm(const FFElem& f, int d, bool twist_w = false);

/// True when f is fixed by t -> zeta t (twist_w false) or w -> zeta w.
bool twist_invariant(const FFElem& f, const CycloNum& zeta, bool twist_w = false);

/// Elements of the fixed field of x -> zeta_3 x on fermat6, written on interC.
/// Throws Errc::subfield_membership.
FFElem descend_fermat6_to_interC(const FFElem& f);
/// Elements of the fixed field of y -> -y on interC, written on e36.
FFElem descend_interC_to_e36(const FFElem& f);

struct PushforwardTrace {
  Symbol ross;        // {1 - x, 1 - y} on fermat6
  Symbol after_q;     // on interC
  Symbol result;      // on e36
  int degree = 0;     // product of the norm degrees
  std::vector<std::string> steps;
};

/// The chain fermat6 -> interC -> e36 by Kummer norms and the projection formula.
PushforwardTrace pushforward_e36();

/// Polynomial in T with coefficients in a function field, ascending.
class PolyFF {
 public:
  PolyFF() = default;
  PolyFF(CurveTag tag, std::vector<FFElem> coeffs);

  CurveTag tag() const { return tag_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FFElem>& coeffs() const { return c_; }
  const FFElem& lead() const { return c_.back(); }
  /// Index m of the lowest nonzero coefficient.
  int trailing_index() const;

  /// (a_m T^m)^-1 f(T).
  PolyFF star() const;
  /// (-1)^n a_n.
  FFElem c() const;
  static PolyFF rem(const PolyFF& a, const PolyFF& b);
  FFElem eval(const FFElem& x) const;
  PolyFF pullback(const CurveMap& map) const;

  friend bool operator==(const PolyFF&, const PolyFF&) = default;
  std::string str() const;

 private:
  CurveTag tag_ = CurveTag::e64;
  std::vector<FFElem> c_;
};

struct RossetTate {
  std::vector<PolyFF> g;  // g_0, ..., g_m
  SymbolSum trace;        // -sum_{i=1}^m {c(g_{i-1}^*), c(g_i)}
  bool degenerate = false;  // a zero remainder appeared after a nonconstant g_i
};

/// Throws Errc::invalid_argument for a zero or non-monic g0 or deg g1 >= deg g0.
RossetTate rosset_tate(const PolyFF& g0, const PolyFF& g1);

/// g(generator) = 0 after pulling the coefficients of g back along the map.
bool verify_annihilation(const PolyFF& g, const CurveMap& map, const FFElem& generator);

/// Irreducibility witness for a quadratic g over the base: a root in the cover that is
/// moved by the automorphism t -> alpha t, w -> beta w of the cover over the base.
bool quadratic_irreducible_by_witness(const PolyFF& g, const CurveMap& map, const FFElem& root,
                                      const CycloNum& alpha, const CycloNum& beta);

/// The polynomials g_0, g_1 from the Ross element e_4 pushed to e64.
PolyFF rt_g0();
PolyFF rt_g1();

}  // namespace cmlab::ksym

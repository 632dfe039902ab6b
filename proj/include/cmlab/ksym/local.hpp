#pragma once

#include "cmlab/ecdiv/ecdiv.hpp"
#include "cmlab/ksym/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cmlab::ksym {

/// sum_{i<n} c_i s^(val+i) + O(s^(val+n)). Leading coefficient nonzero unless c is empty,
/// in which case the series is O(s^val).
struct Laurent {
  int val = 0;
  std::vector<CycloNum> c;

  static Laurent constant(const CycloNum& x, int prec);
  /// s^k with relative precision prec.
  static Laurent monomial(const CycloNum& x, int k, int prec);

  bool unknown() const { return c.empty(); }
  int precision() const { return val + static_cast<int>(c.size()); }
  void normalize();
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
/// Throws Errc::expansion_depth when the leading term is not known.
Laurent inverse(const Laurent& a);
Laurent pow(const Laurent& a, long e);

/// A place of a radical curve together with its uniformizer s:
///   finite    t - t0          (w0 != 0)
///   ramified  w               (w0 = 0, simple root t0 of h)
///   infinite  t / w           (elliptic curves, one place)
///             1 / t           (d | deg h, one place per d-th root c of the leading coefficient, w ~ c t^(deg h / d))
struct Place {
  enum class Kind { finite, ramified, infinite };
  CurveTag tag = CurveTag::e36;
  Kind kind = Kind::finite;
  CycloNum t0, w0;

  /// Finite place (t0, w0); throws Errc::off_curve unless w0^d = h(t0).
  static Place at(CurveTag tag, const CycloNum& t0, const CycloNum& w0);
  /// Place at infinity; `c` selects the branch when there is more than one.
  static Place at_infinity(CurveTag tag, const CycloNum& c = CycloNum());
  /// Image of an elliptic-curve point (e36 or e64 only).
  static Place from_point(CurveTag tag, const ecdiv::Point& p);

  friend bool operator==(const Place&, const Place&) = default;
  std::string str() const;
  std::string uniformizer() const;
};

/// All places over t = t0 (given one of them) or over infinity.
std::vector<Place> fiber(const Place& pl);
std::vector<Place> places_at_infinity(CurveTag tag);

/// t and w as Laurent series in the uniformizer, with `depth` relative terms.
std::pair<Laurent, Laurent> expand(const Place& pl, int depth);
/// f as a Laurent series in the uniformizer.
Laurent expand(const FFElem& f, const Place& pl, int depth);

/// Order and leading coefficient of f at pl. Depth starts at 12 and doubles up to max_depth;
/// throws Errc::expansion_depth beyond it, Errc::division_by_zero for f = 0.
struct Leading {
  int ord = 0;
  CycloNum coeff;
};
Leading leading(const FFElem& f, const Place& pl, int max_depth = 192);
int ord_at(const FFElem& f, const Place& pl);
/// f(pl) for f regular at pl; throws Errc::domain at a pole.
CycloNum value_at(const FFElem& f, const Place& pl);

/// (-1)^(ord f ord g) (f^ord g / g^ord f)(pl).
CycloNum tame_symbol(const FFElem& f, const FFElem& g, const Place& pl);

struct DivisorCheck {
  bool ok = false;
  /// One line per failed check.
  std::vector<std::string> report;
  /// Degree of the zero divisor of f, once verified.
  long zeros = 0;
};

/// Proves div f = claimed: orders at the claimed places and at every other place of
/// their fibres and at infinity, div(N f) equal to the pushforward of the claim, and no
/// poles of the coefficients outside the claimed fibres.
DivisorCheck verify_divisor(const FFElem& f, const std::vector<std::pair<Place, long>>& claimed);
DivisorCheck verify_divisor(const FFElem& f, const ecdiv::Divisor& claimed);

}  // namespace cmlab::ksym

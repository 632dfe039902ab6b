#pragma once

#include "cmlab/cyclo/cyclonum.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmlab::ecdiv {

using cyclo::CycloNum;

/// Affine point (u, v) or the point at infinity. Ordered with infinity first,
/// then lexicographically on the coefficients of u and then v.
struct Point {
  bool inf = true;
  CycloNum u, v;

  static Point infinity() { return {}; }
  static Point at(CycloNum u, CycloNum v) { return {false, std::move(u), std::move(v)}; }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  /// "inf" or "(u, v)" in the cyclotomic text form.
  std::string str() const;
};

/// v^2 = u^3 + a u + b with rational a, b.
struct Curve {
  int conductor = 36;
  long a = 0, b = 1;

  static Curve e36() { return {36, 0, 1}; }
  static Curve e64() { return {64, -4, 0}; }
  /// Throws Errc::invalid_argument for other conductors.
  static Curve from_conductor(int n);

  bool contains(const Point& p) const;
  /// Throws Errc::off_curve.
  void require(const Point& p) const;
};

/// Chord-tangent addition with identity at infinity.
Point std_add(const Curve& c, const Point& p, const Point& q);
Point std_neg(const Point& p);

/// Group law translated so that `base` is the identity: x (+) y = x + y - base.
class GroupLaw {
 public:
  GroupLaw(Curve curve, Point base);
  /// Origin (-1, 0) for conductor 36, infinity for 64.
  static GroupLaw standard_for(int conductor);

  const Curve& curve() const { return curve_; }
  const Point& base() const { return base_; }

  Point add(const Point& p, const Point& q) const;
  Point neg(const Point& p) const;
  Point sub(const Point& p, const Point& q) const { return add(p, neg(q)); }
  Point mul(long n, const Point& p) const;
  /// Least n <= bound with n p = base.
  std::optional<int> order(const Point& p, int bound = 48) const;
  bool is_two_torsion(const Point& p) const { return add(p, p) == base_; }

 private:
  Curve curve_;
  Point base_;
};

/// Named points on the two curves.
namespace pts {
// conductor 36
Point O36();  // (-1, 0)
Point P36();  // (0, 1)
Point R36();  // (2, -3)
// conductor 64
Point P0();   // (2, 0)
Point P1();   // (-2, 0)
Point R64();  // (0, 0)
Point S();    // (2 + 2 sqrt2, 4 + 4 sqrt2)
Point T();    // (2 - 2 sqrt2, 4 - 4 sqrt2)
/// Image of the n-th point at infinity of x^4 + y^4 = 1: (2 i (-1)^n, 4 zeta8^3 i^(3n)).
Point Q64(int n);
}  // namespace pts

/// The f-torsion subgroup: 12 points for conductor 36, 16 for 64, sorted.
/// Throws Errc::consistency if the generated set is not a group of that size.
std::vector<Point> torsion_Ef(int conductor);

using Divisor = std::map<Point, long>;
using FormalSum = std::map<Point, mpq_class>;

long degree(const Divisor& d);
Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator*(long k, const Divisor& d);
FormalSum operator+(const FormalSum& a, const FormalSum& b);
FormalSum operator-(const FormalSum& a, const FormalSum& b);
FormalSum operator*(const mpq_class& k, const FormalSum& s);
/// Drops zero entries in place.
void prune(Divisor& d);
void prune(FormalSum& s);

std::string str(const Divisor& d);
std::string str(const FormalSum& s);

/// Parses "m1*(u1, v1) + m2*inf - (u3, v3)" with cyclotomic coordinates.
Divisor parse_divisor(const std::string& text);

/// sum_{i,j} m_i n_j [p_i (-) q_j]. Throws Errc::degree unless both have degree 0.
FormalSum beta_map(const GroupLaw& law, const Divisor& f, const Divisor& g);

/// Quotient of the point group algebra (tensor Q) by [p] + [(-)p], by the classes of
/// 2-torsion points and by explicitly registered relations.
class B3 {
 public:
  explicit B3(GroupLaw law) : law_(std::move(law)) {}

  const GroupLaw& law() const { return law_; }
  /// Canonical form: each point replaced by the smaller of {p, (-)p},
  /// 2-torsion dropped, registered relations eliminated.
  FormalSum reduce(const FormalSum& s) const;
  /// Declares s = 0. Returns the reduced relation actually added (empty if redundant).
  FormalSum register_relation(const FormalSum& s);
  std::size_t relation_count() const { return relations_.size(); }

 private:
  FormalSum canonical(const FormalSum& s) const;

  GroupLaw law_;
  std::vector<std::pair<Point, FormalSum>> relations_;  // reduced echelon form, pivot coefficient 1
};

/// beta(div f, div(1 - f)), registered in `ctx` as a relation. Returns the reduced form
/// of the relation before registration.
FormalSum steinberg_relation(B3& ctx, const Divisor& f, const Divisor& one_minus_f);

}  // namespace cmlab::ecdiv

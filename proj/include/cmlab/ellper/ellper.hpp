#pragma once
// Period lattices, the normalized invariant differential and elliptic
// logarithms for the two CM curves, plus the labeling E_f = O_K / f.

#include "cmlab/cyclo/cyclonum.hpp"
#include "cmlab/ecdiv/ecdiv.hpp"
#include "cmlab/mpnum/arb.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cmlab::ellper {

using cyclo::CycloNum;
using ecdiv::Curve;
using ecdiv::Point;
using mpnum::ArbComplex;
using mpnum::ArbReal;
using mpnum::PrecisionContext;

struct PeriodData {
  int conductor = 36;
  ArbComplex Omega;    ///< generator, Gamma = O_K * Omega
  ArbReal OmegaR;      ///< real period of omega_E
  CycloNum h_unit;     ///< OmegaR = h * Omega
  ArbReal scale_c;     ///< omega_E = c * du / (2v)
  CycloNum nu;         ///< generator of the conductor ideal
  int orientation = 1; ///< omega_E = orientation * scale_c * du / (2v)
  ArbComplex gen1, gen2;  ///< Z-basis of Gamma from the root data
};

/// Real period of the normalized differential, via the AGM.
ArbReal real_period(const Curve& curve, const PrecisionContext& ctx);

/// Throws Errc::consistency if Omega fails to generate Gamma over O_K or
/// Omega / conj(nu) is not real.
PeriodData lattice(const Curve& curve, const PrecisionContext& ctx);

/// Reduce z modulo Gamma into the centred parallelogram of gen1, gen2.
ArbComplex reduce(const ArbComplex& z, const PeriodData& pd);

/// Integral of omega_E from the group-law origin to P, reduced modulo Gamma.
ArbComplex elliptic_log(const Curve& curve, const Point& p, const PrecisionContext& ctx);
ArbComplex elliptic_log(const PeriodData& pd, const Point& p, const PrecisionContext& ctx);

/// The Weierstrass elliptic log of du/(2v) measured from infinity; not reduced.
ArbComplex weierstrass_log(const Curve& curve, const Point& p, const PrecisionContext& ctx);

/// 2 * integral of du/(2v) over E(R)^0 by double-exponential quadrature.
ArbReal real_component_integral(const Curve& curve, const PrecisionContext& ctx);

// Arithmetic in O_K = Z[i] (conductor 64) or Z[zeta_3] (conductor 36).

/// Coordinates (a, b) with x = a + b*g, g = i or zeta_3; nullopt if x is not in K.
std::optional<std::pair<mpq_class, mpq_class>> ok_coords(const CycloNum& x, int conductor);
bool in_ok(const CycloNum& x, int conductor);
bool congruent(const CycloNum& x, const CycloNum& y, const CycloNum& modulus, int conductor);
/// Smallest positive integer in the ideal (modulus).
long ideal_min_integer(const CycloNum& modulus, int conductor);
/// Smallest representative a + b*g, 0 <= a, b < ideal_min_integer, in (b, a) order.
CycloNum reduce_mod(const CycloNum& x, const CycloNum& modulus, int conductor);
CycloNum conductor_generator(int conductor);
/// Roots of unity of K.
std::vector<CycloNum> units_of(int conductor);

struct TorsionLabel {
  Point point;
  CycloNum label;
  double distance = 0.0;  ///< distance from w to the nearest lattice point
};

/// Throws Errc::consistency when w is not within 1e-5 of O_K.
TorsionLabel torsion_label(const PeriodData& pd, const Point& p, const PrecisionContext& ctx);
TorsionLabel torsion_label(const Curve& curve, const Point& p, const PrecisionContext& ctx);

/// Trace((1 + 2i) * chi) == a5.
bool chi_f_check(const CycloNum& chi_value, long a5);
/// chi_f(1 - 2i) = 1 against a5(E64) from point counting.
bool chi_f_check(const PrecisionContext& ctx);
/// True when `reps` is a full set of representatives of (O_K/f)^* / mu_K.
bool unit_representatives_ok(const std::vector<CycloNum>& reps, int conductor);

}  // namespace cmlab::ellper

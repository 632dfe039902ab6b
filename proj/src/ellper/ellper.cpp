#include "cmlab/ellper/ellper.hpp"

#include "cmlab/error.hpp"
#include "cmlab/hecke/hecke.hpp"
#include "cmlab/mpnum/special.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <set>

namespace cmlab::ellper {

using mpnum::Complex;
using mpnum::Float;

namespace {

double mag(const Float& x) { return std::fabs(x.to_double()); }
double mag(const Complex& z) { return mpnum::abs(z).to_double(); }

double working_err(const PrecisionContext& ctx, double scale = 1.0) {
  return scale * std::pow(10.0, -(ctx.digits + ctx.guard / 2));
}

ArbComplex embed(const CycloNum& x, const PrecisionContext& ctx) { return x.embed(ctx); }

ArbComplex real_arb(const Float& x) { return ArbComplex(Complex(x)); }

CycloNum omega() { return CycloNum::zeta3(); }

// Roots of u^3 + a u + b with the real root (the largest, if all are real) first.
std::array<CycloNum, 3> roots(const Curve& c) {
  if (c.conductor == 36) return {CycloNum(-1), -omega(), -omega().conj()};
  if (c.conductor == 64) return {CycloNum(2), CycloNum(0), CycloNum(-2)};
  throw Error(Errc::invalid_argument, "no root data for conductor " + std::to_string(c.conductor));
}

CycloNum ok_generator(int conductor) { return conductor == 64 ? CycloNum::i() : omega(); }

CycloNum h_unit_for(int conductor) {
  return conductor == 36 ? CycloNum(1) - omega().conj() : CycloNum(1);
}

// Lattice of du/(2v): real period and a second generator.
std::pair<ArbComplex, ArbComplex> raw_periods(const Curve& c, const PrecisionContext& ctx) {
  const auto e = roots(c);
  const mpfr_prec_t p = ctx.bits();
  const ArbComplex pi = real_arb(mpnum::const_pi(p));
  auto root = [&](const CycloNum& x) {
    const ArbComplex a = embed(x, ctx);
    return ArbComplex(mpnum::sqrt(a.value), a.err);
  };
  const ArbComplex agm_r = mpnum::agm(root(e[0] - e[1]), root(e[0] - e[2]), ctx);
  ArbComplex w1 = pi / agm_r;
  w1.value.im = Float(0L, p);
  ArbComplex w2;
  if (c.conductor == 64) {
    const ArbComplex agm_i = mpnum::agm(root(e[0] - e[2]), root(e[1] - e[2]), ctx);
    const ArbComplex q = pi / agm_i;
    w2 = ArbComplex(Complex(Float(0L, p), q.value.re), q.err);
  } else {
    const ArbComplex half = mpnum::carlson_rf(embed(e[1] - e[0], ctx), ArbComplex(Complex(p)),
                                              embed(e[1] - e[2], ctx), ctx);
    w2 = half + half;
  }
  return {w1, w2};
}

ArbReal scale_from(const ArbComplex& w1, const ArbComplex& w2, const PrecisionContext& ctx) {
  const Complex cross = mpnum::conj(w1.value) * w2.value;
  const Float area = mpnum::abs(cross.im);
  const Float c = mpnum::sqrt(mpnum::const_pi(ctx.bits()) / area);
  return ArbReal(c, working_err(ctx, mag(c)));
}

bool on_cut(const Complex& z, double tiny) {
  return mag(z.im) <= tiny && z.re.sign() < 0;
}

// -(v/s) R_F(u - e_i), or nullopt if the arguments sit on the branch cut.
std::optional<ArbComplex> raw_log(const Curve& c, const Point& pt, const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.bits();
  if (pt.inf) return ArbComplex(Complex(p));
  const auto e = roots(c);
  const double tiny = std::ldexp(1.0, -static_cast<int>(p) / 2);
  std::array<ArbComplex, 3> args;
  int zeros = 0;
  for (int k = 0; k < 3; ++k) {
    args[k] = embed(pt.u - e[k], ctx);
    if ((pt.u - e[k]).is_zero()) {
      args[k] = ArbComplex(Complex(p));
      ++zeros;
    } else if (on_cut(args[k].value, tiny)) {
      return std::nullopt;
    }
  }
  if (zeros > 1) return std::nullopt;
  const ArbComplex r = mpnum::carlson_rf(args[0], args[1], args[2], ctx);
  if (pt.v.is_zero()) return r;
  const Complex s = mpnum::sqrt(args[0].value) * mpnum::sqrt(args[1].value) * mpnum::sqrt(args[2].value);
  const Complex ratio = embed(pt.v, ctx).value / s;
  return ratio.re.sign() > 0 ? -r : r;
}

// Torsion points plus translates of a non-torsion point.
std::vector<Point> auxiliary_points(const Curve& c) {
  const auto torsion = ecdiv::torsion_Ef(c.conductor);
  std::vector<Point> out = torsion;
  const Point a = c.conductor == 64 ? Point::at(6, CycloNum(8) * CycloNum::sqrt3())
                                    : Point::at(1, CycloNum::sqrt2());
  for (const Point& base : {a, ecdiv::std_neg(a)}) {
    for (const Point& t : torsion) out.push_back(ecdiv::std_add(c, base, t));
  }
  return out;
}

std::pair<long, long> nearest_coords(const Complex& w, int conductor, const PrecisionContext& ctx, double& dist) {
  const Complex g = embed(ok_generator(conductor), ctx).value;
  const Float b = w.im / g.im.with_prec(w.prec());
  const Float a = w.re - b * g.re.with_prec(w.prec());
  const long ai = a.round_long(), bi = b.round_long();
  const Complex back = Complex(Float(ai, w.prec())) + Complex(g.re, g.im) * Float(bi, w.prec());
  dist = mag(w - back);
  return {ai, bi};
}

}  // namespace

ArbReal real_period(const Curve& curve, const PrecisionContext& ctx) {
  const auto [w1, w2] = raw_periods(curve, ctx);
  const ArbReal c = scale_from(w1, w2, ctx);
  const ArbReal r = c * w1.real();
  if (r.value.sign() <= 0) throw Error(Errc::consistency, "real period is not positive");
  return r;
}

CycloNum conductor_generator(int conductor) {
  if (conductor == 36) return CycloNum(2) * (CycloNum(1) - omega().conj());
  if (conductor == 64) return CycloNum(4);
  throw Error(Errc::invalid_argument, "unknown conductor " + std::to_string(conductor));
}

PeriodData lattice(const Curve& curve, const PrecisionContext& ctx) {
  PeriodData pd;
  pd.conductor = curve.conductor;
  const auto [w1, w2] = raw_periods(curve, ctx);
  pd.scale_c = scale_from(w1, w2, ctx);
  const ArbComplex c(pd.scale_c);
  pd.gen1 = c * w1;
  pd.gen2 = c * w2;
  pd.OmegaR = pd.gen1.real();
  pd.h_unit = h_unit_for(curve.conductor);
  pd.Omega = ArbComplex(pd.OmegaR) / embed(pd.h_unit, ctx);
  pd.nu = conductor_generator(curve.conductor);
  pd.orientation = curve.conductor == 64 ? -1 : 1;

  // Gamma is contained in O_K * Omega with the same covolume.
  const double tol = std::pow(10.0, -(ctx.digits / 2));
  for (const ArbComplex* g : {&pd.gen1, &pd.gen2}) {
    double dist = 0;
    nearest_coords((*g / pd.Omega).value, curve.conductor, ctx, dist);
    if (dist > tol) throw Error(Errc::consistency, "period is not in O_K * Omega (distance " + mpnum::Float(dist, 53).str(3) + ")");
  }
  const Float area_gamma = mpnum::abs((mpnum::conj(pd.gen1.value) * pd.gen2.value).im);
  const Complex g = embed(ok_generator(curve.conductor), ctx).value;
  const Float area_ok = mpnum::abs(g.im) * mpnum::abs(pd.Omega.value) * mpnum::abs(pd.Omega.value);
  if (mag(area_gamma - area_ok) > tol * mag(area_ok)) {
    throw Error(Errc::consistency, "O_K * Omega is strictly larger than Gamma");
  }
  const ArbComplex ratio = pd.Omega / embed(pd.nu.conj(), ctx);
  if (mag(ratio.value.im) > tol) throw Error(Errc::consistency, "Omega / conj(nu) is not real");
  return pd;
}

ArbComplex reduce(const ArbComplex& z, const PeriodData& pd) {
  // z = x gen1 + y gen2 with real x, y
  const Complex& a = pd.gen1.value;
  const Complex& b = pd.gen2.value;
  const Float det = a.re * b.im - a.im * b.re;
  const Float x = (z.value.re * b.im - z.value.im * b.re) / det;
  const Float y = (a.re * z.value.im - a.im * z.value.re) / det;
  const long m = x.round_long(), n = y.round_long();
  const mpfr_prec_t p = z.value.prec();
  Complex out = z.value - a * Float(m, p) - b * Float(n, p);
  return ArbComplex(std::move(out), z.err + (std::labs(m) + std::labs(n)) * (pd.gen1.err + pd.gen2.err));
}

ArbComplex weierstrass_log(const Curve& curve, const Point& p, const PrecisionContext& ctx) {
  curve.require(p);
  if (auto direct = raw_log(curve, p, ctx)) return *direct;
  // Shift by an auxiliary point whose arguments avoid the cut.
  for (const Point& q : auxiliary_points(curve)) {
    if (q.inf) continue;
    auto zq = raw_log(curve, q, ctx);
    auto zpq = raw_log(curve, ecdiv::std_add(curve, p, q), ctx);
    if (zq && zpq) return *zpq - *zq;
  }
  throw Error(Errc::consistency, "no branch-safe path for elliptic log of " + p.str());
}

ArbComplex elliptic_log(const PeriodData& pd, const Point& p, const PrecisionContext& ctx) {
  const Curve curve = Curve::from_conductor(pd.conductor);
  const Point base = ecdiv::GroupLaw::standard_for(pd.conductor).base();
  const ArbComplex z = weierstrass_log(curve, p, ctx) - weierstrass_log(curve, base, ctx);
  const ArbComplex scaled = ArbComplex(pd.scale_c) * z;
  return reduce(pd.orientation > 0 ? scaled : -scaled, pd);
}

ArbComplex elliptic_log(const Curve& curve, const Point& p, const PrecisionContext& ctx) {
  return elliptic_log(lattice(curve, ctx), p, ctx);
}

ArbReal real_component_integral(const Curve& curve, const PrecisionContext& ctx) {
  // u = e1 + s^2 turns the integral into 2 * int_0^inf ds / sqrt(q(e1 + s^2)),
  // q(u) = u^2 + e1 u + e1^2 + a; then exp-sinh on s.
  const mpfr_prec_t p = ctx.bits();
  const mpq_class e1 = roots(curve)[0].rational();
  const Float fe1(e1, p), fa(curve.a, p);
  auto g = [&](const Float& s) {
    const Float u = fe1 + s * s;
    const Float q = u * u + fe1 * u + fe1 * fe1 + fa;
    return Float(1L, p) / mpnum::sqrt(q);
  };
  const Float half_pi = mpnum::const_pi(p) / 2L;
  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  auto level = [&](const Float& h) {
    Float sum(0L, p);
    for (int dir : {1, -1}) {
      for (long k = (dir > 0 ? 0 : 1);; ++k) {
        const Float t = h * (dir * k);
        const Float sh = (mpnum::exp(t) - mpnum::exp(-t)) / 2L;
        const Float ch = (mpnum::exp(t) + mpnum::exp(-t)) / 2L;
        const Float s = mpnum::exp(half_pi * sh);
        const Float term = g(s) * s * half_pi * ch;
        sum += term;
        if (mag(term) < eps * 1e-3 || k > 100000) break;
        if (!term.is_finite()) break;
      }
    }
    return sum * h;
  };
  Float h(0.5, p);
  Float prev = level(h);
  for (int it = 0; it < 20; ++it) {
    h /= 2L;
    Float cur = level(h);
    const double diff = mag(cur - prev);
    prev = cur;
    if (diff < 1e3 * eps * mag(cur)) break;
  }
  return ArbReal(prev * 2L, working_err(ctx, mag(prev)));
}

std::optional<std::pair<mpq_class, mpq_class>> ok_coords(const CycloNum& x, int conductor) {
  const CycloNum g = ok_generator(conductor);
  const CycloNum b = (x - x.conj()) / (g - g.conj());
  const CycloNum a = x - b * g;
  if (!a.is_rational() || !b.is_rational()) return std::nullopt;
  return std::make_pair(a.rational(), b.rational());
}

bool in_ok(const CycloNum& x, int conductor) {
  const auto ab = ok_coords(x, conductor);
  return ab && ab->first.get_den() == 1 && ab->second.get_den() == 1;
}

long ideal_min_integer(const CycloNum& modulus, int conductor) {
  // norm() is taken over Q(zeta_24), the fourth power of the norm from K
  const long n = std::lround(std::pow(modulus.norm().get_d(), 0.25));
  for (long m = 1; m < n; ++m) {
    if (in_ok(CycloNum(m) / modulus, conductor)) return m;
  }
  return n;
}

bool congruent(const CycloNum& x, const CycloNum& y, const CycloNum& modulus, int conductor) {
  return in_ok((x - y) / modulus, conductor);
}

CycloNum reduce_mod(const CycloNum& x, const CycloNum& modulus, int conductor) {
  if (!in_ok(x, conductor)) throw Error(Errc::invalid_argument, "not an algebraic integer of K: " + x.str());
  const long side = ideal_min_integer(modulus, conductor);
  const CycloNum g = ok_generator(conductor);
  for (long b = 0; b < side; ++b) {
    for (long a = 0; a < side; ++a) {
      const CycloNum r = CycloNum(a) + CycloNum(b) * g;
      if (congruent(x, r, modulus, conductor)) return r;
    }
  }
  throw Error(Errc::consistency, "no representative found modulo " + modulus.str());
}

std::vector<CycloNum> units_of(int conductor) {
  std::vector<CycloNum> out;
  const long step = conductor == 64 ? 6 : 4;
  for (long k = 0; k < 24; k += step) out.push_back(CycloNum::zeta(k));
  return out;
}

TorsionLabel torsion_label(const PeriodData& pd, const Point& p, const PrecisionContext& ctx) {
  const ArbComplex z = elliptic_log(pd, p, ctx);
  const ArbComplex w = z * embed(pd.nu.conj(), ctx) / pd.Omega;
  TorsionLabel out;
  out.point = p;
  const auto [a, b] = nearest_coords(w.value, pd.conductor, ctx, out.distance);
  if (out.distance >= 1e-5) {
    throw Error(Errc::consistency, "no lattice point near the scaled log of " + p.str());
  }
  out.label = reduce_mod(CycloNum(a) + CycloNum(b) * ok_generator(pd.conductor), pd.nu, pd.conductor);
  return out;
}

TorsionLabel torsion_label(const Curve& curve, const Point& p, const PrecisionContext& ctx) {
  return torsion_label(lattice(curve, ctx), p, ctx);
}

bool chi_f_check(const CycloNum& chi_value, long a5) {
  const CycloNum x = (CycloNum(1) + CycloNum(2) * CycloNum::i()) * chi_value;
  const CycloNum trace = x + x.conj();
  return trace == CycloNum(a5);
}

bool chi_f_check(const PrecisionContext&) {
  const long a5 = hecke::ap_pointcount(hecke::CurveId::e64(), 5);
  return chi_f_check(CycloNum(1), a5);
}

bool unit_representatives_ok(const std::vector<CycloNum>& reps, int conductor) {
  const CycloNum f = conductor_generator(conductor);
  const long side = ideal_min_integer(f, conductor);
  const CycloNum g = ok_generator(conductor);
  // Units of O_K / f: classes x with x * y = 1 mod f for some y.
  std::set<CycloNum> all, units;
  for (long a = 0; a < side; ++a) {
    for (long b = 0; b < side; ++b) all.insert(reduce_mod(CycloNum(a) + CycloNum(b) * g, f, conductor));
  }
  for (const CycloNum& x : all) {
    for (const CycloNum& y : all) {
      if (congruent(x * y, CycloNum(1), f, conductor)) {
        units.insert(x);
        break;
      }
    }
  }
  std::set<CycloNum> covered;
  for (const CycloNum& r : reps) {
    if (!in_ok(r, conductor) || !units.count(reduce_mod(r, f, conductor))) return false;
    for (const CycloNum& mu : units_of(conductor)) {
      if (!covered.insert(reduce_mod(r * mu, f, conductor)).second) return false;
    }
  }
  return covered == units;
}

}  // namespace cmlab::ellper

#include "cmlab/ksym/local.hpp"

#include "cmlab/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace cmlab::ksym {

Laurent Laurent::constant(const CycloNum& x, int prec) {
  Laurent r;
  if (x.is_zero()) {
    r.val = prec;
    return r;
  }
  r.c.assign(static_cast<std::size_t>(prec), CycloNum());
  r.c[0] = x;
  return r;
}

Laurent Laurent::monomial(const CycloNum& x, int k, int prec) {
  Laurent r = constant(x, prec);
  r.val += k;
  return r;
}

void Laurent::normalize() {
  std::size_t z = 0;
  while (z < c.size() && c[z].is_zero()) ++z;
  if (z == 0) return;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(z));
  val += static_cast<int>(z);
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  const int prec = std::min(a.precision(), b.precision());
  int lo = prec;
  if (!a.unknown()) lo = std::min(lo, a.val);
  if (!b.unknown()) lo = std::min(lo, b.val);
  Laurent r;
  r.val = lo;
  if (lo >= prec) {
    r.val = prec;
    return r;
  }
  r.c.assign(static_cast<std::size_t>(prec - lo), CycloNum());
  for (std::size_t i = 0; i < a.c.size() && a.val + static_cast<int>(i) < prec; ++i) r.c[a.val + i - lo] += a.c[i];
  for (std::size_t i = 0; i < b.c.size() && b.val + static_cast<int>(i) < prec; ++i) r.c[b.val + i - lo] += b.c[i];
  r.normalize();
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent nb = b;
  for (auto& x : nb.c) x = -x;
  return a + nb;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.val = a.val + b.val;
  if (a.unknown() || b.unknown()) return r;
  const std::size_t n = std::min(a.c.size(), b.c.size());
  r.c.assign(n, CycloNum());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.normalize();
  return r;
}

Laurent inverse(const Laurent& a) {
  if (a.unknown()) throw Error(Errc::expansion_depth, "leading term of a local expansion not determined");
  Laurent r;
  r.val = -a.val;
  const std::size_t n = a.c.size();
  r.c.assign(n, CycloNum());
  const CycloNum inv0 = a.c[0].inv();
  r.c[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    CycloNum acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!a.c[j].is_zero()) acc += a.c[j] * r.c[k - j];
    }
    r.c[k] = -acc * inv0;
  }
  return r;
}

Laurent pow(const Laurent& a, long e) {
  if (e < 0) return inverse(pow(a, -e));
  Laurent acc = Laurent::constant(1, a.unknown() ? 1 : static_cast<int>(a.c.size()));
  if (e == 0) return acc;
  Laurent x = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * x;
    if (e > 1) x = x * x;
  }
  return acc;
}

namespace {

using Series = std::vector<CycloNum>;  // truncated power series, fixed length

Series mul_trunc(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series inv_trunc(const Series& a) {
  Laurent l;
  l.c = a;
  return inverse(l).c;
}

// g^(1/d) for g with g_0 = 1 (Miller's recurrence).
Series root_trunc(const Series& g, int d) {
  const std::size_t n = g.size();
  const CycloNum alpha(mpq_class(1, d));
  Series b(n);
  b[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    CycloNum acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (g[k].is_zero()) continue;
      acc += ((alpha + 1) * CycloNum(static_cast<long>(k)) - CycloNum(static_cast<long>(m))) * g[k] * b[m - k];
    }
    b[m] = acc / CycloNum(static_cast<long>(m));
  }
  return b;
}

Laurent from_series(Series s, int val) {
  Laurent r;
  r.val = val;
  r.c = std::move(s);
  r.normalize();
  return r;
}

// p is nonzero; zero coefficients are skipped so they do not cap the precision
Laurent eval_poly(const Poly& p, const Laurent& x, int prec) {
  const auto& c = p.coeffs();
  Laurent acc = Laurent::constant(c.back(), prec);
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    acc = acc * x;
    if (!it->is_zero()) acc = acc + Laurent::constant(*it, prec);
  }
  return acc;
}

bool elliptic(const RadicalCurve& cv) { return cv.d == 2 && cv.h.degree() == 3; }

CycloNum dth_root_of(const CycloNum& x, int d) {
  for (long k = 0; k < 2 * CycloNum::kOrder; ++k) {
    for (long r : {1L, 2L, 3L, 4L}) {
      const CycloNum c = CycloNum(r) * CycloNum::zeta(k);
      if (c.pow(d) == x) return c;
    }
  }
  throw Error(Errc::domain, "no d-th root of " + x.str() + " found in the cyclotomic field");
}

}  // namespace

Place Place::at(CurveTag tag, const CycloNum& t0, const CycloNum& w0) {
  const RadicalCurve& cv = RadicalCurve::get(tag);
  if (!(w0.pow(cv.d) == cv.h.eval(t0))) {
    throw Error(Errc::off_curve, "(" + t0.str() + ", " + w0.str() + ") is not on " + to_string(tag));
  }
  Place p;
  p.tag = tag;
  p.t0 = t0;
  p.w0 = w0;
  p.kind = w0.is_zero() ? Kind::ramified : Kind::finite;
  if (p.kind == Kind::ramified && cv.h.derivative().eval(t0).is_zero()) {
    throw Error(Errc::domain, "singular point on " + to_string(tag));
  }
  return p;
}

Place Place::at_infinity(CurveTag tag, const CycloNum& c) {
  const RadicalCurve& cv = RadicalCurve::get(tag);
  Place p;
  p.tag = tag;
  p.kind = Kind::infinite;
  if (elliptic(cv)) return p;
  if (cv.h.degree() % cv.d != 0) throw Error(Errc::domain, "unsupported ramification at infinity");
  if (!(c.pow(cv.d) == cv.h.lead())) {
    throw Error(Errc::invalid_argument, "branch constant " + c.str() + " is not a root of the leading coefficient");
  }
  p.w0 = c;
  return p;
}

Place Place::from_point(CurveTag tag, const ecdiv::Point& pt) {
  if (tag != CurveTag::e36 && tag != CurveTag::e64) throw Error(Errc::invalid_argument, "not an elliptic curve tag");
  if (pt.inf) return at_infinity(tag);
  return at(tag, pt.u, pt.v);
}

std::string Place::str() const {
  if (kind == Kind::infinite) return w0.is_zero() ? "inf" : "inf[" + w0.str() + "]";
  return "(" + t0.str() + ", " + w0.str() + ")";
}

std::string Place::uniformizer() const {
  const RadicalCurve& cv = RadicalCurve::get(tag);
  switch (kind) {
    case Kind::finite: return cv.t_name + " - (" + t0.str() + ")";
    case Kind::ramified: return cv.w_name;
    case Kind::infinite: return elliptic(cv) ? cv.t_name + "/" + cv.w_name : "1/" + cv.t_name;
  }
  return {};
}

std::vector<Place> places_at_infinity(CurveTag tag) {
  const RadicalCurve& cv = RadicalCurve::get(tag);
  if (elliptic(cv)) return {Place::at_infinity(tag)};
  const CycloNum c0 = dth_root_of(cv.h.lead(), cv.d);
  std::vector<Place> out;
  for (int j = 0; j < cv.d; ++j) {
    out.push_back(Place::at_infinity(tag, c0 * CycloNum::zeta(CycloNum::kOrder / cv.d * j)));
  }
  return out;
}

std::vector<Place> fiber(const Place& pl) {
  if (pl.kind == Place::Kind::infinite) return places_at_infinity(pl.tag);
  if (pl.kind == Place::Kind::ramified) return {pl};
  const int d = RadicalCurve::get(pl.tag).d;
  std::vector<Place> out;
  for (int j = 0; j < d; ++j) out.push_back(Place::at(pl.tag, pl.t0, pl.w0 * CycloNum::zeta(CycloNum::kOrder / d * j)));
  return out;
}

std::pair<Laurent, Laurent> expand(const Place& pl, int depth) {
  const RadicalCurve& cv = RadicalCurve::get(pl.tag);
  const int d = cv.d;
  const std::size_t n = static_cast<std::size_t>(depth);
  switch (pl.kind) {
    case Place::Kind::finite: {
      // s = t - t0, w = w0 (h(t0 + s) / h(t0))^(1/d)
      const Poly shifted = cv.h.compose(Poly({pl.t0, 1}));
      const CycloNum h0 = shifted.coeff(0);
      Series g(n);
      for (std::size_t k = 0; k < n; ++k) g[k] = shifted.coeff(static_cast<int>(k)) / h0;
      Series w = root_trunc(g, d);
      for (auto& x : w) x *= pl.w0;
      Series t(n);
      t[0] = pl.t0;
      if (n > 1) t[1] = 1;
      return {from_series(std::move(t), 0), from_series(std::move(w), 0)};
    }
    case Place::Kind::ramified: {
      // s = w, t = t0 + tau(s^d) with h(t0 + tau) = s^d
      const Poly H = cv.h.compose(Poly({pl.t0, 1}));
      const std::size_t m = n / static_cast<std::size_t>(d) + 2;
      const CycloNum inv1 = H.coeff(1).inv();
      Series tau(m);
      if (m > 1) tau[1] = inv1;
      for (std::size_t it = 0; it < m; ++it) {
        Series rhs(m), p = tau;
        if (m > 1) rhs[1] = 1;
        for (int k = 2; k <= H.degree(); ++k) {
          p = mul_trunc(p, tau);
          for (std::size_t i = 0; i < m; ++i) rhs[i] -= H.coeff(k) * p[i];
        }
        for (auto& x : rhs) x *= inv1;
        tau = std::move(rhs);
      }
      Series t(m * static_cast<std::size_t>(d));
      for (std::size_t i = 0; i < m; ++i) t[i * d] = tau[i];
      t[0] += pl.t0;
      t.resize(std::max(n, static_cast<std::size_t>(1)));
      return {from_series(std::move(t), 0), Laurent::monomial(1, 1, depth)};
    }
    case Place::Kind::infinite: {
      if (elliptic(cv)) {
        // s = t / w, t = s^-2 U, w = s^-3 U, U = 1 - a s^4 / U - b s^6 / U^2
        const CycloNum a = cv.h.coeff(1), b = cv.h.coeff(0);
        Series U(n);
        U[0] = 1;
        for (std::size_t it = 0; it < n / 4 + 2; ++it) {
          const Series ui = inv_trunc(U);
          const Series ui2 = mul_trunc(ui, ui);
          Series next(n);
          next[0] = 1;
          for (std::size_t i = 0; i + 4 < n; ++i) next[i + 4] -= a * ui[i];
          for (std::size_t i = 0; i + 6 < n; ++i) next[i + 6] -= b * ui2[i];
          U = std::move(next);
        }
        return {from_series(U, -2), from_series(U, -3)};
      }
      // s = 1 / t, w = c s^(-m/d) (s^m h(1/s) / h_m)^(1/d)
      const int m = cv.h.degree();
      const CycloNum hm = cv.h.lead();
      Series g(n);
      for (std::size_t k = 0; k < n && static_cast<int>(k) <= m; ++k) g[k] = cv.h.coeff(m - static_cast<int>(k)) / hm;
      Series w = root_trunc(g, d);
      for (auto& x : w) x *= pl.w0;
      return {Laurent::monomial(1, -1, depth), from_series(std::move(w), -m / d)};
    }
  }
  throw Error(Errc::invalid_argument, "unknown place kind");
}

Laurent expand(const FFElem& f, const Place& pl, int depth) {
  if (f.tag() != pl.tag) throw Error(Errc::invalid_argument, "place and function live on different curves");
  const auto [t, w] = expand(pl, depth);
  // at finite places evaluate Taylor-shifted polynomials in t - t0 to avoid cancellation
  const bool finite = pl.kind != Place::Kind::infinite;
  const Laurent x = finite ? t - Laurent::constant(pl.t0, depth + 64) : t;
  const Poly shift({pl.t0, 1});
  const auto at = [&](const Poly& p) { return eval_poly(finite ? p.compose(shift) : p, x, depth); };
  std::optional<Laurent> acc;
  Laurent wk = Laurent::constant(1, depth);
  for (int k = 0; k < f.curve().d; ++k) {
    const RatFunc& c = f.coeff(k);
    if (!c.is_zero()) {
      Laurent term = at(c.num()) * inverse(at(c.den())) * wk;
      acc = acc ? *acc + term : term;
    }
    wk = wk * w;
  }
  return *acc;
}

Leading leading(const FFElem& f, const Place& pl, int max_depth) {
  if (f.is_zero()) throw Error(Errc::division_by_zero, "order of the zero function");
  for (int depth = 12; depth <= max_depth; depth *= 2) {
    try {
      const Laurent s = expand(f, pl, depth);
      if (!s.unknown()) return {s.val, s.c[0]};
    } catch (const Error& e) {
      if (e.code() != Errc::expansion_depth) throw;
    }
  }
  throw Error(Errc::expansion_depth, "no nonzero term of " + f.str() + " at " + pl.str() + " within " +
                                         std::to_string(max_depth) + " terms");
}

int ord_at(const FFElem& f, const Place& pl) { return leading(f, pl).ord; }

CycloNum value_at(const FFElem& f, const Place& pl) {
  if (f.is_zero()) return {};
  const Leading l = leading(f, pl);
  if (l.ord < 0) throw Error(Errc::domain, f.str() + " has a pole at " + pl.str());
  return l.ord > 0 ? CycloNum() : l.coeff;
}

CycloNum tame_symbol(const FFElem& f, const FFElem& g, const Place& pl) {
  const Leading a = leading(f, pl), b = leading(g, pl);
  CycloNum r = a.coeff.pow(b.ord) / b.coeff.pow(a.ord);
  if ((static_cast<long>(a.ord) * b.ord) % 2 != 0) r = -r;
  return r;
}

DivisorCheck verify_divisor(const FFElem& f, const std::vector<std::pair<Place, long>>& claimed) {
  DivisorCheck out;
  if (f.is_zero()) {
    out.report.push_back("the zero function has no divisor");
    return out;
  }
  std::vector<std::pair<Place, long>> claims;
  for (const auto& [pl, m] : claimed) {
    auto it = std::find_if(claims.begin(), claims.end(), [&](const auto& c) { return c.first == pl; });
    if (it == claims.end()) claims.emplace_back(pl, m); else it->second += m;
  }
  const auto claimed_at = [&](const Place& pl) -> const long* {
    for (const auto& c : claims) {
      if (c.first == pl) return &c.second;
    }
    return nullptr;
  };
  const auto check = [&](const Place& pl, long expected) {
    const int got = ord_at(f, pl);
    if (got != expected) {
      out.report.push_back("ord at " + pl.str() + " is " + std::to_string(got) + ", expected " + std::to_string(expected));
    }
  };

  // orders on every fibre touched by the claim, and on the fibre at infinity
  std::vector<Place> seen;
  const auto visit = [&](const Place& pl) {
    for (const Place& q : fiber(pl)) {
      if (std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
      seen.push_back(q);
      const long* m = claimed_at(q);
      check(q, m ? *m : 0);
    }
  };
  for (const auto& c : claims) visit(c.first);
  visit(places_at_infinity(f.tag()).front());

  // div(N f) against the pushforward of the claim
  std::vector<std::pair<CycloNum, long>> pushed;
  for (const auto& [pl, m] : claims) {
    if (pl.kind == Place::Kind::infinite) continue;
    auto it = std::find_if(pushed.begin(), pushed.end(), [&](const auto& e) { return e.first == pl.t0; });
    if (it == pushed.end()) pushed.emplace_back(pl.t0, m); else it->second += m;
  }
  std::vector<CycloNum> roots;
  Poly zero_part(1), pole_part(1);
  for (const auto& [t0, m] : pushed) {
    roots.push_back(t0);
    const Poly lin({-t0, 1});
    if (m > 0) zero_part = zero_part * lin.pow(static_cast<int>(m));
    if (m < 0) pole_part = pole_part * lin.pow(static_cast<int>(-m));
  }
  const RatFunc n = f.norm();
  if (!((n.num() * pole_part).monic() == (n.den() * zero_part).monic())) {
    out.report.push_back("norm of f is not the pushforward of the claim: N f = " + n.str(f.curve().t_name));
  }

  // poles can only sit over roots of the coefficient denominators
  for (const RatFunc& c : f.coeffs()) {
    Poly rest = c.den();
    for (const CycloNum& r : roots) {
      while (rest.degree() > 0 && rest.eval(r).is_zero()) rest = Poly::divmod(rest, Poly({-r, 1})).first;
    }
    if (rest.degree() == 0) continue;
    if (rest.degree() == 1) {
      const CycloNum r = -rest.coeff(0) / rest.coeff(1);
      const Poly& h = f.curve().h;
      if (h.eval(r).is_zero()) {
        visit(Place::at(f.tag(), r, CycloNum()));
        continue;
      }
    }
    out.report.push_back("cannot exclude poles over the roots of " + rest.str(f.curve().t_name));
  }

  for (const auto& [pl, m] : claims) {
    if (m > 0) out.zeros += m;
  }
  out.ok = out.report.empty();
  return out;
}

DivisorCheck verify_divisor(const FFElem& f, const ecdiv::Divisor& claimed) {
  std::vector<std::pair<Place, long>> places;
  for (const auto& [p, m] : claimed) places.emplace_back(Place::from_point(f.tag(), p), m);
  return verify_divisor(f, places);
}

}  // namespace cmlab::ksym

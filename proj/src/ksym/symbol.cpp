#include "cmlab/ksym/symbol.hpp"

#include "cmlab/error.hpp"

#include <algorithm>

namespace cmlab::ksym {

Symbol::Symbol(FFElem f_, FFElem g_) : f(std::move(f_)), g(std::move(g_)) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::invalid_argument, "symbol with a zero entry");
  if (f.tag() != g.tag()) throw Error(Errc::invalid_argument, "symbol entries on different curves");
}

std::string Symbol::str() const { return "{" + f.str() + ", " + g.str() + "}"; }

std::string str(const SymbolSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& t : s) {
    const long k = t.coeff;
    std::string head;
    if (out.empty()) {
      head = k < 0 ? "-" : "";
    } else {
      head = k < 0 ? " - " : " + ";
    }
    const long a = k < 0 ? -k : k;
    out += head + (a == 1 ? "" : std::to_string(a)) + t.sym.str();
  }
  return out;
}

namespace {

void check_index(const SymbolSum& s, std::size_t i) {
  if (i >= s.size()) throw Error(Errc::invalid_argument, "no symbol term " + std::to_string(i));
}

bool same_terms(SymbolSum a, SymbolSum b) {
  if (a.size() != b.size()) return false;
  for (const auto& t : a) {
    auto it = std::find(b.begin(), b.end(), t);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

SymbolSum invert_first(const SymbolSum& s, std::size_t i) {
  check_index(s, i);
  SymbolSum r = s;
  r[i] = {-s[i].coeff, Symbol(s[i].sym.f.inv(), s[i].sym.g)};
  return r;
}

SymbolSum swap_slots(const SymbolSum& s, std::size_t i) {
  check_index(s, i);
  SymbolSum r = s;
  r[i] = {-s[i].coeff, Symbol(s[i].sym.g, s[i].sym.f)};
  return r;
}

SymbolSum drop_steinberg(const SymbolSum& s, std::size_t i) {
  check_index(s, i);
  const Symbol& x = s[i].sym;
  const FFElem one = FFElem::constant(x.f.tag(), 1);
  if (!(x.g == one - x.f) && !(x.g == -x.f)) {
    throw Error(Errc::invalid_argument, "term " + x.str() + " is not of the form {a, 1-a} or {a, -a}");
  }
  SymbolSum r = s;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
  return r;
}

std::optional<std::vector<Move>> rewrite_to(const SymbolSum& a, const SymbolSum& b) {
  // normalize both sides to positive coefficients by first-slot inversion, then match;
  // unmatched terms of a are retried after swapping slots
  std::vector<Move> moves;
  SymbolSum cur = a;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (cur[i].coeff < 0) {
      cur = invert_first(cur, i);
      moves.push_back({"invert first slot of term " + std::to_string(i), cur});
    }
  }
  SymbolSum target = b;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i].coeff < 0) target = invert_first(target, i);
  }
  if (same_terms(cur, target)) return moves;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (std::find(target.begin(), target.end(), cur[i]) != target.end()) continue;
    SymbolSum trial = invert_first(swap_slots(cur, i), i);
    if (std::find(target.begin(), target.end(), trial[i]) != target.end()) {
      cur = swap_slots(cur, i);
      moves.push_back({"swap slots of term " + std::to_string(i), cur});
      cur = invert_first(cur, i);
      moves.push_back({"invert first slot of term " + std::to_string(i), cur});
    }
  }
  if (same_terms(cur, target)) return moves;
  return std::nullopt;
}

void CurveMap::validate() const {
  if (t_image.tag() != cover || w_image.tag() != cover) throw Error(Errc::consistency, name + ": images not on the cover");
  const RadicalCurve& cv = RadicalCurve::get(base);
  if (!(w_image.pow(cv.d) == evaluate(cv.h, t_image))) {
    throw Error(Errc::consistency, name + ": image does not satisfy the quotient equation");
  }
}

CurveMap CurveMap::e36_from_fermat6() {
  const auto x = FFElem::t(CurveTag::fermat6), y = FFElem::w(CurveTag::fermat6);
  CurveMap m{CurveTag::e36, CurveTag::fermat6, -(y * y), x.pow(3), "fermat6 -> e36"};
  m.validate();
  return m;
}

CurveMap CurveMap::e64_from_fermat4() {
  const auto x = FFElem::t(CurveTag::fermat4), y = FFElem::w(CurveTag::fermat4);
  const auto one = FFElem::constant(CurveTag::fermat4, 1);
  const auto c = [](long k) { return FFElem::constant(CurveTag::fermat4, k); };
  CurveMap m{CurveTag::e64, CurveTag::fermat4, c(2) * (y * y + one) / (x * x), c(4) * y * (y * y + one) / x.pow(3),
             "fermat4 -> e64"};
  m.validate();
  return m;
}

CurveMap CurveMap::interC_from_fermat6() {
  CurveMap m{CurveTag::interC, CurveTag::fermat6, FFElem::w(CurveTag::fermat6), FFElem::t(CurveTag::fermat6).pow(3),
             "fermat6 -> interC"};
  m.validate();
  return m;
}

CurveMap CurveMap::e36_from_interC() {
  const auto y = FFElem::t(CurveTag::interC);
  CurveMap m{CurveTag::e36, CurveTag::interC, -(y * y), FFElem::w(CurveTag::interC), "interC -> e36"};
  m.validate();
  return m;
}

FFElem substitute_quotient(const CurveMap& map, const FFElem& f) {
  if (f.tag() != map.base) {
    throw Error(Errc::invalid_argument, "cannot pull back a function on " + to_string(f.tag()) + " along " + map.name);
  }
  FFElem acc = FFElem::constant(map.cover, 0);
  FFElem wk = FFElem::constant(map.cover, 1);
  for (const RatFunc& c : f.coeffs()) {
    if (!c.is_zero()) acc = acc + evaluate(c, map.t_image) * wk;
    wk = wk * map.w_image;
  }
  return acc;
}

bool twist_invariant(const FFElem& f, const CycloNum& zeta, bool twist_w) {
  const FFElem g = twist_w ? f.apply_diag(1, zeta) : f.apply_diag(zeta, 1);
  return g == f;
}

FFElem kummer_norm(const FFElem& f, int d, bool twist_w) {
  if (d <= 0 || CycloNum::kOrder % d != 0) throw Error(Errc::invalid_argument, "zeta_d not in the coefficient field");
  const CycloNum zeta = CycloNum::zeta(CycloNum::kOrder / d);
  FFElem acc = f;
  CycloNum z = zeta;
  for (int j = 1; j < d; ++j, z *= zeta) acc = acc * (twist_w ? f.apply_diag(1, z) : f.apply_diag(z, 1));
  if (!twist_invariant(acc, zeta, twist_w)) {
    throw Error(Errc::subfield_membership, "Kummer norm of " + f.str() + " is not fixed by the twist");
  }
  return acc;
}

namespace {

// r with r(s^e) = p, or nullopt.
std::optional<Poly> poly_in_power(const Poly& p, int e) {
  std::vector<CycloNum> out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    if (k % e != 0) return std::nullopt;
    if (static_cast<int>(out.size()) <= k / e) out.resize(static_cast<std::size_t>(k / e) + 1);
    out[k / e] = p.coeff(k);
  }
  return Poly(std::move(out));
}

RatFunc rat_in_power(const RatFunc& r, int e, const std::string& what) {
  const auto n = poly_in_power(r.num(), e), d = poly_in_power(r.den(), e);
  if (!n || !d) throw Error(Errc::subfield_membership, what + " is not in the fixed field");
  return {*n, *d};
}

}  // namespace

FFElem descend_fermat6_to_interC(const FFElem& f) {
  if (f.tag() != CurveTag::fermat6) throw Error(Errc::invalid_argument, "expected a function on fermat6");
  // sum_k r_k(x^3) y^k -> sum_k r_k(v) y^k
  const FFElem v = FFElem::w(CurveTag::interC), y = FFElem::t(CurveTag::interC);
  FFElem acc = FFElem::constant(CurveTag::interC, 0), yk = FFElem::constant(CurveTag::interC, 1);
  for (const RatFunc& c : f.coeffs()) {
    if (!c.is_zero()) acc = acc + evaluate(rat_in_power(c, 3, f.str()), v) * yk;
    yk = yk * y;
  }
  return acc;
}

FFElem descend_interC_to_e36(const FFElem& f) {
  if (f.tag() != CurveTag::interC) throw Error(Errc::invalid_argument, "expected a function on interC");
  // r_0(y^2) + r_1(y^2) v -> r_0(-u) + r_1(-u) v
  std::vector<RatFunc> out;
  for (const RatFunc& c : f.coeffs()) out.push_back(rat_in_power(c, 2, f.str()).scale_var(-1));
  return {CurveTag::e36, std::move(out)};
}

PushforwardTrace pushforward_e36() {
  PushforwardTrace tr;
  const auto x = FFElem::t(CurveTag::fermat6), y = FFElem::w(CurveTag::fermat6);
  const auto one6 = FFElem::constant(CurveTag::fermat6, 1);
  tr.ross = Symbol(one6 - x, one6 - y);

  // q: x -> zeta_3 x; 1 - y is fixed, so q_*{1-x, 1-y} = {N(1-x), 1-y}
  if (!twist_invariant(tr.ross.g, CycloNum::zeta3())) throw Error(Errc::consistency, "1 - y is not fixed by q");
  const FFElem nq = kummer_norm(tr.ross.f, 3);
  tr.steps.push_back("q: N(1 - x) = " + nq.str() + " (degree 3); 1 - y fixed");
  tr.after_q = Symbol(descend_fermat6_to_interC(nq), descend_fermat6_to_interC(tr.ross.g));
  tr.steps.push_back("on interC: " + tr.after_q.str());

  // r: y -> -y; 1 - v is fixed, so r_*{1-v, 1-y} = {1-v, N(1-y)}
  if (!twist_invariant(tr.after_q.f, CycloNum(-1))) throw Error(Errc::consistency, "1 - v is not fixed by r");
  const FFElem nr = kummer_norm(tr.after_q.g, 2);
  tr.steps.push_back("r: N(1 - y) = " + nr.str() + " (degree 2); 1 - v fixed");
  tr.result = Symbol(descend_interC_to_e36(tr.after_q.f), descend_interC_to_e36(nr));
  tr.steps.push_back("on e36: " + tr.result.str());
  tr.degree = 3 * 2;
  return tr;
}

PolyFF::PolyFF(CurveTag tag, std::vector<FFElem> coeffs) : tag_(tag), c_(std::move(coeffs)) {
  for (const auto& x : c_) {
    if (x.tag() != tag_) throw Error(Errc::invalid_argument, "coefficient on the wrong curve");
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int PolyFF::trailing_index() const {
  for (int k = 0; k <= degree(); ++k) {
    if (!c_[k].is_zero()) return k;
  }
  throw Error(Errc::invalid_argument, "zero polynomial has no trailing term");
}

PolyFF PolyFF::star() const {
  const int m = trailing_index();
  const FFElem inv = c_[m].inv();
  std::vector<FFElem> out;
  for (int k = m; k <= degree(); ++k) out.push_back(c_[k] * inv);
  return {tag_, std::move(out)};
}

FFElem PolyFF::c() const {
  if (is_zero()) throw Error(Errc::invalid_argument, "c of the zero polynomial");
  return degree() % 2 == 0 ? lead() : -lead();
}

PolyFF PolyFF::rem(const PolyFF& a, const PolyFF& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "remainder by the zero polynomial");
  std::vector<FFElem> r = a.c_;
  const FFElem inv = b.lead().inv();
  for (int k = a.degree(); k >= b.degree(); --k) {
    if (r[k].is_zero()) continue;
    const FFElem f = r[k] * inv;
    for (int j = 0; j <= b.degree(); ++j) r[k - b.degree() + j] = r[k - b.degree() + j] - f * b.c_[j];
  }
  return {a.tag_, std::move(r)};
}

FFElem PolyFF::eval(const FFElem& x) const {
  if (x.tag() != tag_) throw Error(Errc::invalid_argument, "evaluation point on the wrong curve");
  FFElem acc = FFElem::constant(tag_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyFF PolyFF::pullback(const CurveMap& map) const {
  std::vector<FFElem> out;
  for (const auto& x : c_) out.push_back(substitute_quotient(map, x));
  return {map.cover, std::move(out)};
}

std::string PolyFF::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    const std::string mono = k == 0 ? "" : (k == 1 ? "T" : "T^" + std::to_string(k));
    std::string term = "(" + c_[k].str() + ")";
    if (!mono.empty()) term = c_[k] == FFElem::constant(tag_, 1) ? mono : term + "*" + mono;
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

RossetTate rosset_tate(const PolyFF& g0, const PolyFF& g1) {
  if (g0.is_zero() || g1.is_zero()) throw Error(Errc::invalid_argument, "Rosset-Tate input is the zero polynomial");
  if (g0.degree() < 1 || !(g0.lead() == FFElem::constant(g0.tag(), 1))) {
    throw Error(Errc::invalid_argument, "g0 must be monic of positive degree");
  }
  if (g1.degree() >= g0.degree()) throw Error(Errc::invalid_argument, "deg g1 must be below deg g0");
  RossetTate out;
  out.g = {g0, g1};
  for (;;) {
    const PolyFF& prev = out.g[out.g.size() - 2];
    const PolyFF& cur = out.g.back();
    PolyFF next = PolyFF::rem(prev.star(), cur);
    if (next.is_zero()) {
      out.degenerate = cur.degree() > 0;
      break;
    }
    if (next.degree() >= cur.degree()) throw Error(Errc::nontermination, "remainder degree did not decrease");
    out.g.push_back(std::move(next));
  }
  for (std::size_t i = 1; i < out.g.size(); ++i) out.trace.push_back({-1, Symbol(out.g[i - 1].star().c(), out.g[i].c())});
  return out;
}

bool verify_annihilation(const PolyFF& g, const CurveMap& map, const FFElem& generator) {
  return g.pullback(map).eval(generator).is_zero();
}

bool quadratic_irreducible_by_witness(const PolyFF& g, const CurveMap& map, const FFElem& root, const CycloNum& alpha,
                                      const CycloNum& beta) {
  if (g.degree() != 2) return false;
  // the automorphism must fix the base
  if (!(map.t_image.apply_diag(alpha, beta) == map.t_image) || !(map.w_image.apply_diag(alpha, beta) == map.w_image)) {
    return false;
  }
  if (!verify_annihilation(g, map, root)) return false;
  return !(root.apply_diag(alpha, beta) == root);
}

PolyFF rt_g0() {
  const auto u = FFElem::t(CurveTag::e64);
  const auto c = [](long k) { return FFElem::constant(CurveTag::e64, k); };
  // (T - 1)^2 - 4u/(u^2 + 4)
  return {CurveTag::e64, {c(1) - c(4) * u / (u * u + c(4)), c(-2), c(1)}};
}

PolyFF rt_g1() {
  const auto u = FFElem::t(CurveTag::e64), v = FFElem::w(CurveTag::e64);
  const auto k = v / (FFElem::constant(CurveTag::e64, 2) * u);
  return {CurveTag::e64, {FFElem::constant(CurveTag::e64, 1) - k, k}};
}

}  // namespace cmlab::ksym

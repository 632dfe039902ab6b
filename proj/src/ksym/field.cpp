#include "cmlab/ksym/field.hpp"

#include "cmlab/core/expr.hpp"
#include "cmlab/error.hpp"

namespace cmlab::ksym {

std::string to_string(CurveTag tag) {
  switch (tag) {
    case CurveTag::fermat4: return "fermat4";
    case CurveTag::fermat6: return "fermat6";
    case CurveTag::e36: return "e36";
    case CurveTag::e64: return "e64";
    case CurveTag::interC: return "interC";
  }
  return "?";
}

CurveTag curve_from_string(const std::string& name) {
  for (CurveTag t : {CurveTag::fermat4, CurveTag::fermat6, CurveTag::e36, CurveTag::e64, CurveTag::interC}) {
    if (to_string(t) == name) return t;
  }
  if (name == "36") return CurveTag::e36;
  if (name == "64") return CurveTag::e64;
  throw Error(Errc::invalid_argument, "unknown curve '" + name + "'");
}

const RadicalCurve& RadicalCurve::get(CurveTag tag) {
  static const RadicalCurve curves[] = {
      {CurveTag::fermat4, 4, Poly({1, 0, 0, 0, -1}), "x", "y"},
      {CurveTag::fermat6, 6, Poly({1, 0, 0, 0, 0, 0, -1}), "x", "y"},
      {CurveTag::e36, 2, Poly({1, 0, 0, 1}), "u", "v"},
      {CurveTag::e64, 2, Poly({0, -4, 0, 1}), "u", "v"},
      {CurveTag::interC, 2, Poly({1, 0, 0, 0, 0, 0, -1}), "y", "v"},
  };
  return curves[static_cast<int>(tag)];
}

FFElem::FFElem(CurveTag tag, const RatFunc& c) : tag_(tag), c_(static_cast<std::size_t>(curve().d)) { c_[0] = c; }

FFElem::FFElem(CurveTag tag, std::vector<RatFunc> coeffs) : tag_(tag), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != curve().d) throw Error(Errc::invalid_argument, "wrong number of coefficients");
}

FFElem FFElem::t(CurveTag tag) { return {tag, RatFunc(Poly::var())}; }

FFElem FFElem::w(CurveTag tag) {
  FFElem r(tag, RatFunc(0L));
  r.c_[1] = RatFunc(1L);
  return r;
}

bool FFElem::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool FFElem::in_base() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return false;
  }
  return true;
}

bool FFElem::is_constant() const { return in_base() && c_[0].is_constant(); }

FFElem FFElem::operator-() const {
  FFElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

void same_curve(const FFElem& a, const FFElem& b) {
  if (a.tag() != b.tag()) {
    throw Error(Errc::invalid_argument, "elements of different function fields: " + to_string(a.tag()) + ", " +
                                            to_string(b.tag()));
  }
}

}  // namespace

FFElem operator+(const FFElem& a, const FFElem& b) {
  same_curve(a, b);
  FFElem r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = r.c_[k] + b.c_[k];
  return r;
}

FFElem operator-(const FFElem& a, const FFElem& b) { return a + (-b); }

FFElem operator*(const FFElem& a, const FFElem& b) {
  same_curve(a, b);
  const RadicalCurve& cv = a.curve();
  const int d = cv.d;
  std::vector<RatFunc> acc(static_cast<std::size_t>(2 * d - 1));
  for (int i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      acc[i + j] = acc[i + j] + a.c_[i] * b.c_[j];
    }
  }
  const RatFunc h(cv.h);
  for (int k = 2 * d - 2; k >= d; --k) {
    if (!acc[k].is_zero()) acc[k - d] = acc[k - d] + h * acc[k];
  }
  acc.resize(static_cast<std::size_t>(d));
  return {a.tag_, std::move(acc)};
}

bool operator==(const FFElem& a, const FFElem& b) { return a.tag_ == b.tag_ && a.c_ == b.c_; }

FFElem FFElem::conj(int j) const {
  const int d = curve().d;
  const CycloNum z = CycloNum::zeta(cyclo::CycloNum::kOrder / d * j);
  FFElem r = *this;
  CycloNum f(1);
  for (auto& c : r.c_) {
    c = c * RatFunc(f);
    f *= z;
  }
  return r;
}

RatFunc FFElem::norm() const {
  if (in_base()) return c_[0].pow(curve().d);
  FFElem acc = *this;
  for (int j = 1; j < curve().d; ++j) acc = acc * conj(j);
  if (!acc.in_base()) throw Error(Errc::consistency, "norm did not land in K(t)");
  return acc.c_[0];
}

FFElem FFElem::inv() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero in the function field of " + to_string(tag_));
  if (in_base()) return {tag_, c_[0].inv()};
  FFElem others = conj(1);
  for (int j = 2; j < curve().d; ++j) others = others * conj(j);
  const FFElem n = *this * others;
  if (!n.in_base()) throw Error(Errc::consistency, "norm did not land in K(t)");
  return others * FFElem(tag_, n.c_[0].inv());
}

FFElem FFElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FFElem acc = constant(tag_, 1), x = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * x;
    if (e > 1) x = x * x;
  }
  return acc;
}

FFElem FFElem::apply_diag(const CycloNum& alpha, const CycloNum& beta) const {
  const RadicalCurve& cv = curve();
  if (!(cv.h.scale_var(alpha) == cv.h * Poly(beta.pow(cv.d)))) {
    throw Error(Errc::invalid_argument, "substitution is not an automorphism of " + to_string(tag_));
  }
  FFElem r = *this;
  CycloNum f(1);
  for (auto& c : r.c_) {
    c = c.scale_var(alpha) * RatFunc(f);
    f *= beta;
  }
  return r;
}

std::string FFElem::str() const {
  const RadicalCurve& cv = curve();
  std::string out;
  for (int k = 0; k < cv.d; ++k) {
    if (c_[k].is_zero()) continue;
    std::string coef = c_[k].str(cv.t_name);
    const std::string mono = k == 0 ? "" : (k == 1 ? cv.w_name : cv.w_name + "^" + std::to_string(k));
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else if (coef == "-1") {
      term = "-" + mono;
    } else {
      const bool compound = coef.find_first_of("+-/", 1) != std::string::npos;
      term = (compound ? "(" + coef + ")" : coef) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

FFElem evaluate(const Poly& p, const FFElem& x) {
  FFElem acc = FFElem::constant(x.tag(), 0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + FFElem::constant(x.tag(), *it);
  return acc;
}

FFElem evaluate(const RatFunc& r, const FFElem& x) { return evaluate(r.num(), x) / evaluate(r.den(), x); }

FFElem parse_function(CurveTag tag, std::string_view text) {
  const RadicalCurve& cv = RadicalCurve::get(tag);
  expr::Hooks<FFElem> hooks;
  hooks.number = [tag](const mpq_class& q) { return FFElem::constant(tag, CycloNum(q)); };
  hooks.identifier = [tag, &cv](const std::string& name) {
    if (name == cv.t_name) return FFElem::t(tag);
    if (name == cv.w_name) return FFElem::w(tag);
    return FFElem::constant(tag, CycloNum::parse(name));
  };
  hooks.power = [](const FFElem& b, long e) { return b.pow(e); };
  hooks.divide = [](const FFElem& a, const FFElem& b) { return a / b; };
  return expr::parse(text, hooks);
}

}  // namespace cmlab::ksym

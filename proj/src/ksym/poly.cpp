#include "cmlab/ksym/poly.hpp"

#include "cmlab/error.hpp"

#include <algorithm>

namespace cmlab::ksym {

Poly::Poly(const CycloNum& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<CycloNum> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const CycloNum& c, int n) {
  std::vector<CycloNum> v(static_cast<std::size_t>(n) + 1);
  v[n] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloNum Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[k];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<CycloNum> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CycloNum> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<CycloNum> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  std::vector<CycloNum> r = a.c_;
  const CycloNum inv_lead = b.lead().inv();
  for (int k = a.degree(); k >= b.degree(); --k) {
    if (r[k].is_zero()) continue;
    const CycloNum f = r[k] * inv_lead;
    q[k - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) r[k - b.degree() + j] -= f * b.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const CycloNum inv_lead = lead().inv();
  Poly r = *this;
  for (auto& x : r.c_) x *= inv_lead;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error(Errc::invalid_argument, "negative polynomial power");
  Poly acc(1), x = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * x;
    if (e > 1) x = x * x;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<CycloNum> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = CycloNum(static_cast<long>(k)) * c_[k];
  return Poly(std::move(v));
}

CycloNum Poly::eval(const CycloNum& x) const {
  CycloNum acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::scale_var(const CycloNum& c) const {
  Poly r = *this;
  CycloNum f(1);
  for (auto& x : r.c_) {
    x *= f;
    f *= c;
  }
  r.trim();
  return r;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
  return acc;
}

namespace {

bool needs_parens(const std::string& s) {
  return s.find_first_of("+-", 1) != std::string::npos;
}

}  // namespace

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    std::string coef = c_[k].str();
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (mono.empty()) {
      term = needs_parens(coef) ? "(" + coef + ")" : coef;
    } else if (coef == "1") {
      term = mono;
    } else if (coef == "-1") {
      term = "-" + mono;
    } else {
      term = (needs_parens(coef) ? "(" + coef + ")" : coef) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  const Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  const CycloNum lead = den.lead();
  if (!(lead == CycloNum(1))) {
    const CycloNum inv = lead.inv();
    num = num * Poly(inv);
    den = den * Poly(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // both factors are reduced, so cancelling across is enough
  const Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
  const auto cut = [](const Poly& p, const Poly& g) { return g.degree() > 0 ? Poly::divmod(p, g).first : p; };
  RatFunc r;
  r.num_ = cut(a.num_, g1) * cut(b.num_, g2);
  r.den_ = cut(a.den_, g2) * cut(b.den_, g1);
  const CycloNum lead = r.den_.lead();
  if (!(lead == CycloNum(1))) {
    const CycloNum inv = lead.inv();
    r.num_ = r.num_ * Poly(inv);
    r.den_ = r.den_ * Poly(inv);
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of the zero rational function");
  return {den_, num_};
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  // powers of a reduced fraction with monic denominator stay reduced
  RatFunc r;
  r.num_ = num_.pow(static_cast<int>(e));
  r.den_ = den_.pow(static_cast<int>(e));
  return r;
}

RatFunc RatFunc::compose(const RatFunc& q) const {
  // homogenized: num(q) / den(q) with q = a / b
  const int d = std::max(num_.degree(), den_.degree());
  const auto hom = [&](const Poly& p) {
    Poly acc_num, bpow(1);
    for (int k = d; k >= 0; --k) {
      acc_num = acc_num * q.num() + Poly(p.coeff(k)) * bpow;
      bpow = bpow * q.den();
    }
    return acc_num;
  };
  return {hom(num_), hom(den_)};
}

std::string RatFunc::str(const std::string& var) const {
  const std::string n = num_.str(var);
  if (den_.degree() == 0) return n;
  const std::string d = den_.str(var);
  const auto wrap = [](const std::string& s) {
    return s.find_first_of("+-", 1) != std::string::npos || s.find('*') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(n) + "/" + wrap(d);
}

}  // namespace cmlab::ksym

#include "cmlab/ecdiv/ecdiv.hpp"

#include "cmlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cmlab::ecdiv {

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.inf || b.inf) return b.inf <=> a.inf;
  if (auto c = a.u <=> b.u; c != 0) return c;
  return a.v <=> b.v;
}

std::string Point::str() const {
  if (inf) return "inf";
  return "(" + u.str() + ", " + v.str() + ")";
}

Curve Curve::from_conductor(int n) {
  if (n == 36) return e36();
  if (n == 64) return e64();
  throw Error(Errc::invalid_argument, "curve must be 36 or 64, got " + std::to_string(n));
}

bool Curve::contains(const Point& p) const {
  if (p.inf) return true;
  return p.v * p.v == p.u * p.u * p.u + CycloNum(a) * p.u + CycloNum(b);
}

void Curve::require(const Point& p) const {
  if (!contains(p)) throw Error(Errc::off_curve, p.str() + " is not on the curve of conductor " + std::to_string(conductor));
}

Point std_neg(const Point& p) {
  if (p.inf) return p;
  return Point::at(p.u, -p.v);
}

Point std_add(const Curve& c, const Point& p, const Point& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  CycloNum lambda;
  if (p.u == q.u) {
    if (p.v == -q.v) return Point::infinity();
    lambda = (CycloNum(3) * p.u * p.u + CycloNum(c.a)) / (CycloNum(2) * p.v);
  } else {
    lambda = (q.v - p.v) / (q.u - p.u);
  }
  const CycloNum u = lambda * lambda - p.u - q.u;
  return Point::at(u, lambda * (p.u - u) - p.v);
}

GroupLaw::GroupLaw(Curve curve, Point base) : curve_(curve), base_(std::move(base)) {
  curve_.require(base_);
  if (!std_add(curve_, base_, base_).inf) throw Error(Errc::invalid_argument, "group-law origin must be 2-torsion");
}

GroupLaw GroupLaw::standard_for(int conductor) {
  if (conductor == 36) return {Curve::e36(), pts::O36()};
  return {Curve::from_conductor(conductor), Point::infinity()};
}

Point GroupLaw::add(const Point& p, const Point& q) const {
  curve_.require(p);
  curve_.require(q);
  return std_add(curve_, std_add(curve_, p, q), std_neg(base_));
}

Point GroupLaw::neg(const Point& p) const {
  curve_.require(p);
  // 2 base - p, and 2 base is infinity
  return std_neg(p);
}

Point GroupLaw::mul(long n, const Point& p) const {
  Point acc = base_, x = n < 0 ? neg(p) : p;
  for (long k = n < 0 ? -n : n; k > 0; k >>= 1) {
    if (k & 1) acc = add(acc, x);
    x = add(x, x);
  }
  return acc;
}

std::optional<int> GroupLaw::order(const Point& p, int bound) const {
  Point x = p;
  for (int n = 1; n <= bound; ++n) {
    if (x == base_) return n;
    x = add(x, p);
  }
  return std::nullopt;
}

namespace pts {
Point O36() { return Point::at(-1, 0); }
Point P36() { return Point::at(0, 1); }
Point R36() { return Point::at(2, -3); }
Point P0() { return Point::at(2, 0); }
Point P1() { return Point::at(-2, 0); }
Point R64() { return Point::at(0, 0); }
Point S() {
  const CycloNum r = CycloNum::sqrt2();
  return Point::at(2 + 2 * r, 4 + 4 * r);
}
Point T() {
  const CycloNum r = CycloNum::sqrt2();
  return Point::at(2 - 2 * r, 4 - 4 * r);
}
Point Q64(int n) {
  const CycloNum i = CycloNum::i();
  return Point::at(2 * i * i.pow(2L * n), 4 * CycloNum::zeta8().pow(3) * i.pow(3L * n));
}
}  // namespace pts

namespace {

std::vector<Point> closure(const GroupLaw& law, std::vector<Point> gens) {
  std::set<Point> set{law.base()};
  std::vector<Point> frontier{law.base()};
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const Point& x : frontier) {
      for (const Point& g : gens) {
        Point y = law.add(x, g);
        if (set.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {set.begin(), set.end()};
}

}  // namespace

std::vector<Point> torsion_Ef(int conductor) {
  const GroupLaw law = GroupLaw::standard_for(conductor);
  std::vector<Point> gens;
  std::size_t expected = 0;
  if (conductor == 36) {
    const CycloNum w = CycloNum::zeta3();
    gens = {Point::at(-1, 0), Point::at(-w, 0), Point::at(-w * w, 0), pts::P36()};
    expected = 12;
  } else {
    const Point s = pts::S();
    gens = {s, Point::at(-s.u, CycloNum::i() * s.v)};
    expected = 16;
  }
  std::vector<Point> out = closure(law, gens);
  if (out.size() != expected) {
    throw Error(Errc::consistency, "torsion set has " + std::to_string(out.size()) + " points, expected " +
                                       std::to_string(expected));
  }
  const std::set<Point> set(out.begin(), out.end());
  for (const Point& x : out) {
    if (!set.count(law.neg(x))) throw Error(Errc::consistency, "torsion set not closed under negation");
    for (const Point& y : out) {
      if (!set.count(law.add(x, y))) throw Error(Errc::consistency, "torsion set not closed under addition");
    }
  }
  return out;
}

long degree(const Divisor& d) {
  long s = 0;
  for (const auto& [p, m] : d) s += m;
  return s;
}

void prune(Divisor& d) { std::erase_if(d, [](const auto& kv) { return kv.second == 0; }); }
void prune(FormalSum& s) { std::erase_if(s, [](const auto& kv) { return kv.second == 0; }); }

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, m] : b) r[p] += m;
  prune(r);
  return r;
}

Divisor operator*(long k, const Divisor& d) {
  Divisor r;
  for (const auto& [p, m] : d) r[p] = k * m;
  prune(r);
  return r;
}

FormalSum operator+(const FormalSum& a, const FormalSum& b) {
  FormalSum r = a;
  for (const auto& [p, c] : b) r[p] += c;
  prune(r);
  return r;
}

FormalSum operator*(const mpq_class& k, const FormalSum& s) {
  FormalSum r;
  for (const auto& [p, c] : s) r[p] = k * c;
  prune(r);
  return r;
}

FormalSum operator-(const FormalSum& a, const FormalSum& b) { return a + mpq_class(-1) * b; }

namespace {

template <class Map>
std::string join_terms(const Map& m) {
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : m) {
    std::ostringstream coef;
    coef << c;
    std::string s = coef.str();
    const bool negative = s.front() == '-';
    if (negative) s.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (s != "1") os << s << '*';
    os << p.str();
  }
  return os.str();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

}  // namespace

std::string str(const Divisor& d) { return join_terms(d); }
std::string str(const FormalSum& s) { return join_terms(s); }

Divisor parse_divisor(const std::string& text) {
  Divisor out;
  std::size_t i = 0;
  const auto fail = [&](const std::string& why) {
    throw Error(Errc::parse, "divisor '" + text + "': " + why);
  };
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  for (;;) {
    skip();
    if (i == text.size()) break;
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    long m = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t used = 0;
      m = std::stol(text.substr(i), &used);
      i += used;
      skip();
      if (i < text.size() && text[i] == '*') ++i;
      skip();
    }
    Point p;
    if (text.compare(i, 3, "inf") == 0) {
      i += 3;
    } else if (i < text.size() && text[i] == '(') {
      int depth = 0;
      std::size_t comma = std::string::npos, j = i;
      for (; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        if (text[j] == ')' && --depth == 0) break;
        if (text[j] == ',' && depth == 1) comma = j;
      }
      if (j == text.size() || comma == std::string::npos) fail("unbalanced point literal");
      p = Point::at(CycloNum::parse(trim(text.substr(i + 1, comma - i - 1))),
                    CycloNum::parse(trim(text.substr(comma + 1, j - comma - 1))));
      i = j + 1;
    } else {
      fail("expected a point literal or inf");
    }
    out[p] += sign * m;
  }
  prune(out);
  return out;
}

FormalSum beta_map(const GroupLaw& law, const Divisor& f, const Divisor& g) {
  if (degree(f) != 0 || degree(g) != 0) {
    throw Error(Errc::degree, "Bloch map needs degree-0 divisors, got " + std::to_string(degree(f)) + " and " +
                                  std::to_string(degree(g)));
  }
  FormalSum out;
  for (const auto& [p, m] : f) {
    for (const auto& [q, n] : g) out[law.sub(p, q)] += mpq_class(m * n);
  }
  prune(out);
  return out;
}

FormalSum B3::canonical(const FormalSum& s) const {
  FormalSum out;
  for (const auto& [p, c] : s) {
    if (law_.is_two_torsion(p)) continue;
    const Point q = law_.neg(p);
    if (q < p) {
      out[q] -= c;
    } else {
      out[p] += c;
    }
  }
  prune(out);
  return out;
}

FormalSum B3::reduce(const FormalSum& s) const {
  FormalSum out = canonical(s);
  for (const auto& [pivot, rel] : relations_) {
    const auto it = out.find(pivot);
    if (it == out.end()) continue;
    out = out - mpq_class(it->second) * rel;
  }
  return out;
}

FormalSum B3::register_relation(const FormalSum& s) {
  FormalSum r = reduce(s);
  if (r.empty()) return r;
  const Point pivot = r.begin()->first;
  r = mpq_class(mpq_class(1) / r.begin()->second) * r;
  for (auto& entry : relations_) {
    FormalSum& old = entry.second;
    const auto it = old.find(pivot);
    if (it != old.end()) old = old - mpq_class(it->second) * r;
  }
  relations_.emplace_back(pivot, r);
  return r;
}

FormalSum steinberg_relation(B3& ctx, const Divisor& f, const Divisor& one_minus_f) {
  FormalSum rel = ctx.reduce(beta_map(ctx.law(), f, one_minus_f));
  ctx.register_relation(rel);
  return rel;
}

}  // namespace cmlab::ecdiv

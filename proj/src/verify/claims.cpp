#include "cmlab/verify/claims.hpp"

#include "cmlab/error.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>

#ifndef CMLAB_CLAIMS_FILE
#define CMLAB_CLAIMS_FILE "data/claims.json"
#endif

namespace cmlab::verify {

using ecdiv::Divisor;
using ecdiv::FormalSum;
using ecdiv::GroupLaw;
using ecdiv::Point;

namespace {

bool blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Calls emit(sign * coeff, negated, name) per term; name "sum(E_f)" for the torsion sum.
template <class F>
void scan_terms(const std::string& text, F emit) {
  static const std::regex term(R"(\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(?:\[(-?)\s*(\w+)\s*\]|(sum\(E_f\))))");
  std::size_t pos = 0;
  bool first = true;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position(0)) != pos) break;
    if (!first && !m[1].matched) throw Error(Errc::parse, "missing operator in '" + text + "'");
    first = false;
    mpq_class c = m[2].matched ? mpq_class(m[2].str()) : mpq_class(1);
    c.canonicalize();
    if (m[1].matched && m[1].str() == "-") c = -c;
    emit(c, m[3].length() > 0, m[5].matched ? std::string("sum(E_f)") : m[4].str());
    pos += m.length(0);
  }
  if (first || !blank(text.substr(pos))) throw Error(Errc::parse, "cannot read '" + text + "'");
}

}  // namespace

Claims Claims::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::file_format, "cannot open claims file " + path);
  Claims c;
  try {
    in >> c.j_;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::file_format, "claims file " + path + ": " + e.what());
  }
  if (c.j_.value("version", 0) != 1) throw Error(Errc::file_format, "claims file " + path + ": unsupported version");
  c.path_ = path;
  return c;
}

Claims Claims::load_default() {
  if (const char* env = std::getenv("CMLAB_CLAIMS"); env && *env) return load(env);
  return load(CMLAB_CLAIMS_FILE);
}

Point Claims::point(int curve, const std::string& name) const {
  const bool negate = !name.empty() && name.front() == '-';
  const std::string key = negate ? name.substr(1) : name;
  const auto& table = j_.at("points").at(std::to_string(curve));
  if (!table.contains(key)) throw Error(Errc::invalid_argument, "no point named '" + key + "' on " + std::to_string(curve));
  const std::string text = table.at(key).get<std::string>();
  const Divisor d = ecdiv::parse_divisor(text);
  if (d.size() != 1 || d.begin()->second != 1) throw Error(Errc::file_format, "bad point text '" + text + "'");
  const Point p = d.begin()->first;
  ecdiv::Curve::from_conductor(curve).require(p);
  return negate ? GroupLaw::standard_for(curve).neg(p) : p;
}

Point Claims::combination(int curve, const std::string& text) const {
  static const std::regex term(R"(\s*([+-])?\s*(?:(\d+)\s*\*)?\s*(\w+))");
  const GroupLaw law = GroupLaw::standard_for(curve);
  Point acc = law.base();
  std::size_t pos = 0;
  bool first = true;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position(0)) != pos) break;
    if (!first && !m[1].matched) throw Error(Errc::parse, "missing operator in '" + text + "'");
    first = false;
    long k = m[2].matched ? std::stol(m[2].str()) : 1;
    if (m[1].matched && m[1].str() == "-") k = -k;
    acc = law.add(acc, law.mul(k, point(curve, m[3].str())));
    pos += m.length(0);
  }
  if (first || !blank(text.substr(pos))) throw Error(Errc::parse, "cannot read '" + text + "'");
  return acc;
}

FormalSum Claims::formal_sum(int curve, const std::string& text) const {
  FormalSum out;
  if (blank(text) || text.find_first_not_of(" 0") == std::string::npos) return out;
  scan_terms(text, [&](const mpq_class& c, bool negated, const std::string& name) {
    if (name == "sum(E_f)") {
      for (const Point& p : ecdiv::torsion_Ef(curve)) out[p] += c;
    } else {
      out[point(curve, negated ? "-" + name : name)] += c;
    }
  });
  ecdiv::prune(out);
  return out;
}

Divisor Claims::divisor(int curve, const std::string& text) const {
  Divisor out;
  for (const auto& [p, c] : formal_sum(curve, text)) {
    if (c.get_den() != 1) throw Error(Errc::parse, "non-integral divisor '" + text + "'");
    out[p] = c.get_num().get_si();
  }
  return out;
}

const nlohmann::json& Claims::divisor_entry(const std::string& id) const {
  for (const auto& e : j_.at("divisors")) {
    if (e.at("id").get<std::string>() == id) return e;
  }
  throw Error(Errc::invalid_argument, "no divisor claim '" + id + "'");
}

}  // namespace cmlab::verify

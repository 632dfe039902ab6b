#include "cmlab/verify/report.hpp"

#include "cmlab/error.hpp"

#include <cmath>
#include <sstream>

namespace cmlab::verify {

std::string to_string(Kind k) { return k == Kind::exact ? "exact" : "numeric"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "skip";
}

namespace {

Kind kind_from(const std::string& s) {
  if (s == "exact") return Kind::exact;
  if (s == "numeric") return Kind::numeric;
  throw Error(Errc::parse, "unknown report kind '" + s + "'");
}

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skip") return Status::skip;
  throw Error(Errc::parse, "unknown report status '" + s + "'");
}

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
  else j[key] = nullptr;
}

template <class T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

VerificationReport exact_report(std::string id, std::string lhs, std::string rhs, std::vector<std::string> notes) {
  VerificationReport r;
  r.claim_id = std::move(id);
  r.kind = Kind::exact;
  r.status = lhs == rhs ? Status::pass : Status::fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.notes = std::move(notes);
  return r;
}

VerificationReport numeric_report(std::string id, const mpnum::ArbReal& lhs, const mpnum::ArbReal& rhs,
                                  double tolerance, int digits, std::vector<std::string> notes) {
  VerificationReport r;
  r.claim_id = std::move(id);
  r.kind = Kind::numeric;
  r.lhs = lhs.str(digits);
  r.rhs = rhs.str(digits);
  const double err = mpnum::distance(lhs, rhs).to_double();
  r.abs_err = err;
  r.tolerance = tolerance;
  const double scale = std::max(std::fabs(rhs.to_double()), 1.0);
  r.digits_agreed = err == 0.0 ? digits : std::max(0, static_cast<int>(std::floor(-std::log10(err / scale))));
  r.status = err <= tolerance ? Status::pass : Status::fail;
  r.notes = std::move(notes);
  return r;
}

VerificationReport skipped(std::string id, std::string why) {
  VerificationReport r;
  r.claim_id = std::move(id);
  r.status = Status::skip;
  r.notes.push_back(std::move(why));
  return r;
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json::object();
  j["claim_id"] = r.claim_id;
  j["kind"] = to_string(r.kind);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  put_optional(j, "abs_err", r.abs_err);
  put_optional(j, "tolerance", r.tolerance);
  put_optional(j, "digits_agreed", r.digits_agreed);
  j["status"] = to_string(r.status);
  j["notes"] = r.notes;
  put_optional(j, "timing", r.timing);
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  r.claim_id = j.at("claim_id").get<std::string>();
  r.kind = kind_from(j.at("kind").get<std::string>());
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.abs_err = get_optional<double>(j, "abs_err");
  r.tolerance = get_optional<double>(j, "tolerance");
  r.digits_agreed = get_optional<int>(j, "digits_agreed");
  r.status = status_from(j.at("status").get<std::string>());
  r.notes = j.value("notes", std::vector<std::string>{});
  r.timing = get_optional<double>(j, "timing");
}

std::string text_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "SKIP") << "  " << r.claim_id;
  if (r.status == Status::skip) {
    if (!r.notes.empty()) os << ": " << r.notes.front();
    return os.str();
  }
  os << ": " << r.lhs << (r.status == Status::pass && r.kind == Kind::exact ? " == " : " vs ") << r.rhs;
  if (r.kind == Kind::numeric) {
    os.precision(3);
    os << "  [err " << *r.abs_err << ", tol " << *r.tolerance << ", " << *r.digits_agreed << " digits]";
  }
  for (const auto& n : r.notes) os << "\n      " << n;
  return os.str();
}

}  // namespace cmlab::verify

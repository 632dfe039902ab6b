#pragma once
// Per-claim verification results and their JSON / text forms.

#include "cmlab/mpnum/arb.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cmlab::verify {

enum class Kind { exact, numeric };
enum class Status { pass, fail, skip };

std::string to_string(Kind k);
std::string to_string(Status s);

struct VerificationReport {
  std::string claim_id;
  Kind kind = Kind::exact;
  std::string lhs, rhs;
  std::optional<double> abs_err;
  std::optional<double> tolerance;
  std::optional<int> digits_agreed;
  Status status = Status::skip;
  std::vector<std::string> notes;
  std::optional<double> timing;  ///< seconds; left empty in deterministic runs

  bool passed() const { return status == Status::pass; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Passes iff lhs and rhs are the same string.
VerificationReport exact_report(std::string id, std::string lhs, std::string rhs,
                                std::vector<std::string> notes = {});

/// Passes iff |lhs - rhs| <= tolerance. Values are printed with `digits` digits.
VerificationReport numeric_report(std::string id, const mpnum::ArbReal& lhs, const mpnum::ArbReal& rhs,
                                  double tolerance, int digits, std::vector<std::string> notes = {});

VerificationReport skipped(std::string id, std::string why);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// "PASS  id: lhs == rhs" plus the error for numeric reports.
std::string text_line(const VerificationReport& r);

}  // namespace cmlab::verify

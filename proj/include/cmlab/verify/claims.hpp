#pragma once
// The versioned claims file: named points, divisor claims, Bloch images,
// symbol outputs, periods and labels.

#include "cmlab/ecdiv/ecdiv.hpp"

#include <json.hpp>

#include <string>

namespace cmlab::verify {

class Claims {
 public:
  /// Throws Errc::file_format on unreadable or malformed input.
  static Claims load(const std::string& path);
  /// $CMLAB_CLAIMS if set, else the file shipped with the build.
  static Claims load_default();

  const nlohmann::json& json() const { return j_; }
  const std::string& path() const { return path_; }

  /// "X" or "-X" for a name under points/<curve>.
  ecdiv::Point point(int curve, const std::string& name) const;
  /// Group-law combination such as "2*S", "S - T" or "-T".
  ecdiv::Point combination(int curve, const std::string& text) const;
  /// "3[P] - 3[Q]", "[-Q0]", "sum(E_f) - 12[O]".
  ecdiv::Divisor divisor(int curve, const std::string& text) const;
  /// Same grammar with rational coefficients; "0" is the empty sum.
  ecdiv::FormalSum formal_sum(int curve, const std::string& text) const;

  /// Entry of the divisors array with the given id; throws Errc::invalid_argument.
  const nlohmann::json& divisor_entry(const std::string& id) const;

 private:
  nlohmann::json j_;
  std::string path_;
};

}  // namespace cmlab::verify

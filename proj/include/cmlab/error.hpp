#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmlab {

/// Failure categories shared by every module. The CLI maps them to exit codes.
enum class Errc {
  pole,                   // gamma/beta evaluated at a pole
  precision_unachievable, // series or iteration budget exhausted
  divergence,             // series does not converge at the requested point
  domain,                 // argument outside the supported domain
  nonconvergence,         // iterative scheme failed to settle
  bad_prime,              // prime of bad reduction where a good one is needed
  insufficient_coefficients,
  file_format,
  inconsistency,          // data violates a structural invariant
  division_by_zero,
  invalid_argument,
  off_curve,
  degree,                 // divisor of nonzero degree where degree 0 is required
  nontermination,
  expansion_depth,
  subfield_membership,
  parse,
  consistency,            // internal self-check failed
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cmlab

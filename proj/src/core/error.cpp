#include "cmlab/error.hpp"

namespace cmlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::pole: return "pole";
    case Errc::precision_unachievable: return "precision unachievable";
    case Errc::divergence: return "divergence";
    case Errc::domain: return "domain error";
    case Errc::nonconvergence: return "nonconvergence";
    case Errc::bad_prime: return "bad prime";
    case Errc::insufficient_coefficients: return "insufficient coefficients";
    case Errc::file_format: return "file format";
    case Errc::inconsistency: return "inconsistency";
    case Errc::division_by_zero: return "division by zero";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::off_curve: return "point not on curve";
    case Errc::degree: return "degree";
    case Errc::nontermination: return "nontermination";
    case Errc::expansion_depth: return "expansion depth exceeded";
    case Errc::subfield_membership: return "subfield membership";
    case Errc::parse: return "parse error";
    case Errc::consistency: return "consistency failure";
  }
  return "unknown";
}

}  // namespace cmlab

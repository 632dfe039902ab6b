#pragma once

#include "cmlab/mpnum/arb.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cmlab::hecke {

/// One of the two CM curves y^2 = x^3 + a x + b of conductor 36 or 64.
struct CurveId {
  int conductor = 36;
  long a = 0, b = 1;
  std::vector<long> bad_primes;
  int root_number = 1;

  static CurveId e36();
  static CurveId e64();
  /// Throws Errc::invalid_argument for conductors other than 36 and 64.
  static CurveId from_conductor(int n);

  bool is_bad(long p) const;
  /// -16(4a^3 + 27b^2)
  long discriminant() const { return -16 * (4 * a * a * a + 27 * b * b); }
};

enum class CoeffSource { pointcount, cm, file, eta };

std::string to_string(CoeffSource s);
/// Accepts "pointcount", "cm", "file", "eta".
CoeffSource source_from_string(const std::string& name);

/// a_n for 1 <= n <= n_max; a[0] is unused and zero.
struct CoeffTable {
  long n_max = 0;
  std::vector<long> a;
  CoeffSource source = CoeffSource::cm;

  long at(long n) const { return a.at(static_cast<std::size_t>(n)); }
};

/// p + 1 - #E(F_p) by exhaustive enumeration. Throws Errc::bad_prime at bad p.
long ap_pointcount(const CurveId& c, long p);

/// a_p from the Hecke character: 0 for inert p, otherwise the trace of the
/// generator of a prime above p normalized by a fixed congruence class modulo
/// the conductor ideal (see hecke.cpp). Throws Errc::bad_prime at bad p.
long ap_cm(const CurveId& c, long p);

/// Table of a_n from a_p via multiplicativity and the Hecke recursion.
/// Source file reads `path`; source eta is defined for conductor 36 only.
CoeffTable build_coeffs(const CurveId& c, long n_max, CoeffSource source, const std::string& path = {});

/// Parses `n,a_n` lines (ascending n from 1, no header).
/// Throws Errc::file_format on malformed input and Errc::inconsistency when a
/// 1% sample violates multiplicativity or the prime-power recursion.
CoeffTable read_coeff_file(const CurveId& c, std::istream& in);
void write_coeff_file(const CoeffTable& t, std::ostream& out);

/// Coefficients of q prod_{n>=1} (1 - q^{6n})^4 up to q^n_max.
std::vector<long> eta_product_36(long n_max);

/// Returns an empty string when every structural invariant of the table holds
/// (a_1 = 1, multiplicativity, prime-power recursion, bad primes, Hasse bound),
/// otherwise a description of the first violation.
std::string check_invariants(const CurveId& c, const CoeffTable& t);

/// Smallest table length l_two accepts at this precision.
long required_terms(const CurveId& c, const mpnum::PrecisionContext& ctx);

/// L(E, 2) by the approximate functional equation with root number +1.
/// Throws Errc::insufficient_coefficients when t.n_max < required_terms.
mpnum::ArbReal l_two(const CurveId& c, const CoeffTable& t, const mpnum::PrecisionContext& ctx);

/// L*(E, 0) = N / (2 pi)^2 * L(E, 2), from a CM coefficient table.
mpnum::ArbReal lstar_zero(const CurveId& c, const mpnum::PrecisionContext& ctx);
mpnum::ArbReal lstar_zero(const CurveId& c, const CoeffTable& t, const mpnum::PrecisionContext& ctx);

}  // namespace cmlab::hecke

#pragma once
// Claim checks shared by the command-line tool and the acceptance runner.

#include "cmlab/hecke/hecke.hpp"
#include "cmlab/mpnum/arb.hpp"
#include "cmlab/verify/claims.hpp"
#include "cmlab/verify/report.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace cmlab::verify {

struct Options {
  mpnum::PrecisionContext ctx{30, 10, 100000};
  hecke::CoeffSource source = hecke::CoeffSource::cm;
  std::string an_file;
};

using Reports = std::vector<VerificationReport>;

/// L*(E, 0) against the hypergeometric side; tolerance 10^-(digits - 10).
VerificationReport check_identity(int curve, const Options& opt);
/// ap_cm == ap_pointcount for every good p < p_max.
VerificationReport check_coefficients(int curve, long p_max = 500);
/// l_two against sum_{n <= 10^5} a_n / n^2, relative 5e-3.
VerificationReport check_afe(int curve, const Options& opt);

/// Bloch-map images, the Steinberg step and the factor 2.
Reports check_bloch(int curve, const Claims& claims);
/// Point identities, torsion sizes and closure.
Reports check_points(const Claims& claims);
/// g2, the two-symbol output, annihilation and irreducibility.
Reports check_rosset_tate(const Claims& claims);
Reports check_pushforward(const Claims& claims);
/// verify_divisor on every divisor claim (optionally one curve).
Reports check_divisors(const Claims& claims, std::optional<int> curve = std::nullopt);
/// One divisor claim given as text.
VerificationReport check_divisor(int curve, const std::string& function, const std::string& divisor,
                                 const Claims& claims, long scale = 1);
Reports check_periods(int curve, const Options& opt, const Claims& claims);
Reports check_torsion_labels(int curve, const Options& opt, const Claims& claims);
VerificationReport check_chi_f(const Claims& claims);
/// Gauss-reduction cross-checks on 20 random parameter sets and the F~ spot inequalities.
Reports check_hyp(const Options& opt);

struct Criterion {
  int number = 0;
  std::string title;
  Reports reports;
  double seconds = 0;
  bool passed() const;
};

/// Criteria 1 to 12 in order.
std::vector<Criterion> run_acceptance(const Claims& claims, const Options& opt);

/// Stamps wall-clock seconds onto every report produced by `fn`.
template <class F>
auto timed(F fn, bool deterministic) {
  const auto t0 = std::chrono::steady_clock::now();
  auto out = fn();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!deterministic) {
    if constexpr (std::is_same_v<decltype(out), VerificationReport>) {
      out.timing = s;
    } else {
      for (auto& r : out) r.timing = s;
    }
  }
  return out;
}

}  // namespace cmlab::verify

// Acceptance runner: one line per criterion, failing reports underneath.
//
// Exit status is 0 when every failure is a listed known deviation whose
// ".corrected" companion report passes, and 1 otherwise.

#include "cmlab/verify/checks.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

using namespace cmlab::verify;

namespace {

struct Deviation {
  std::string why;
};

const std::map<std::string, Deviation>& known_deviations() {
  static const std::map<std::string, Deviation> k{
      {"divisor.e64.f2",
       {"the claimed divisor of f2 is not its divisor: u - 2 vanishes to order 2 at the ramified point P0, "
        "so div(f2) = 4[P0] - [Q0] - [-Q0] - [Q3] - [-Q3] and f2 has no zero at O; the Bloch image is 0 either way"}},
  };
  return k;
}

// Runtime budgets in seconds per criterion.
const std::map<int, double> kBudget{{1, 60.0}, {2, 60.0}, {3, 10.0}, {5, 5.0}};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (argc > 1) opt.ctx.digits = std::stoi(argv[1]);
  const Claims claims = Claims::load_default();
  const auto criteria = run_acceptance(claims, opt);

  std::map<std::string, bool> status;
  for (const auto& c : criteria) {
    for (const auto& r : c.reports) status[r.claim_id] = r.passed();
  }

  bool ok = true;
  int green = 0;
  for (const auto& c : criteria) {
    bool pass = c.passed();
    std::string extra;
    if (auto b = kBudget.find(c.number); b != kBudget.end() && c.seconds > b->second) {
      pass = false;
      extra = "  over budget of " + std::to_string(static_cast<int>(b->second)) + " s";
    }
    std::printf("Criterion %2d: %s  %s (%.2f s)%s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(), c.seconds,
                extra.c_str());
    green += pass ? 1 : 0;
    if (!extra.empty()) ok = false;
    for (const auto& r : c.reports) {
      if (r.status != Status::fail) continue;
      std::cout << "    " << text_line(r) << '\n';
      const auto k = known_deviations().find(r.claim_id);
      if (k == known_deviations().end()) {
        ok = false;
        continue;
      }
      const auto fixed = status.find(r.claim_id + ".corrected");
      const bool fixed_ok = fixed != status.end() && fixed->second;
      std::cout << "    known deviation: " << k->second.why << '\n'
                << "    " << r.claim_id << ".corrected: " << (fixed_ok ? "PASS" : "FAIL") << '\n';
      ok = ok && fixed_ok;
    }
  }
  std::printf("%d/%zu criteria pass; %s\n", green, criteria.size(),
              ok ? "all failures are known deviations" : "unexpected failures");
  return ok ? 0 : 1;
}

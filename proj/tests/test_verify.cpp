#include "doctest.h"

#include "cmlab/ellper/ellper.hpp"
#include "cmlab/error.hpp"
#include "cmlab/verify/checks.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace cmlab;
using namespace cmlab::verify;

namespace {

const Claims& claims() {
  static const Claims c = Claims::load_default();
  return c;
}

std::filesystem::path scratch(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

// Exit status of the CLI with stdout sent to `out`.
int cli(const std::string& args, const std::filesystem::path& out = "/dev/null") {
  const std::string cmd = std::string(CMLAB_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("report json round trip") {
  const mpnum::PrecisionContext ctx;
  const auto x = mpnum::ArbReal::exact(3, ctx.bits());
  const auto y = mpnum::ArbReal(mpnum::Float(3.0000001, ctx.bits()), 0.0);
  for (const VerificationReport& r :
       {exact_report("a", "1", "1", {"note"}), exact_report("b", "1", "2"), numeric_report("c", x, y, 1e-3, 30),
        skipped("d", "not run")}) {
    const nlohmann::json j = r;
    CHECK(j.at("claim_id") == r.claim_id);
    CHECK(j.contains("abs_err"));
    CHECK(j.contains("timing"));
    CHECK(j.get<VerificationReport>() == r);
  }
  nlohmann::json bad = exact_report("e", "x", "x");
  bad["status"] = "maybe";
  CHECK_THROWS_AS(bad.get<VerificationReport>(), Error);
}

TEST_CASE("report status follows the comparison") {
  CHECK(exact_report("x", "a", "a").status == Status::pass);
  CHECK(exact_report("x", "a", "b").status == Status::fail);
  CHECK_FALSE(skipped("x", "why").passed());
  const mpnum::PrecisionContext ctx;
  const auto one = mpnum::ArbReal::exact(1, ctx.bits());
  for (int k = 1; k < 30; k += 4) {
    const auto near = one + mpnum::ArbReal(mpnum::Float(std::pow(10.0, -k), ctx.bits()), 0.0);
    const auto r = numeric_report("x", near, one, 1e-12, 30);
    CHECK(r.passed() == (*r.abs_err <= 1e-12));
    CHECK(*r.digits_agreed >= k - 1);
    CHECK(*r.digits_agreed <= k + 1);
  }
}

TEST_CASE("claims file: points, combinations and divisors") {
  const Claims& c = claims();
  CHECK(c.json().at("version") == 1);
  const auto law = ecdiv::GroupLaw::standard_for(64);
  CHECK(c.combination(64, "2*S") == c.point(64, "P0"));
  CHECK(c.combination(64, "S - R") == c.point(64, "-T"));
  CHECK(c.combination(64, "S - S") == law.base());
  CHECK(c.point(64, "-Q0") == law.neg(c.point(64, "Q0")));
  CHECK(c.divisor(64, "0").empty());
  const auto d = c.divisor(36, "3[P] - 3[Q]");
  CHECK(d.size() == 2);
  CHECK(d.at(c.point(36, "P")) == 3);
  CHECK(c.formal_sum(36, "sum(E_f)").size() == 12);
  CHECK_THROWS_AS(c.point(64, "Z"), Error);
  CHECK_THROWS_AS(c.divisor(36, "3[P] 3[Q]"), Error);
  CHECK_THROWS_AS(c.divisor(36, "1/2[P]"), Error);
  CHECK_THROWS_AS(c.combination(64, "2*S +"), Error);
}

TEST_CASE("claims file: load errors") {
  CHECK_THROWS_AS(Claims::load("/nonexistent/claims.json"), Error);
  const auto p = scratch("cmlab_bad_claims.json");
  std::ofstream(p) << R"({"version": 2})";
  CHECK_THROWS_AS(Claims::load(p.string()), Error);
  std::ofstream(p) << "{ not json";
  CHECK_THROWS_AS(Claims::load(p.string()), Error);
  std::filesystem::remove(p);
}

TEST_CASE("divisor checks reject a wrong divisor and accept the computed one") {
  const Claims& c = claims();
  CHECK(check_divisor(64, "u - 2", "2[P0] - 2[O]", c).passed());
  CHECK_FALSE(check_divisor(64, "u - 2", "4[P0] - 4[O]", c).passed());
  const auto& f2 = c.divisor_entry("e64.f2");
  const std::string fn = f2.at("function");
  CHECK_FALSE(check_divisor(64, fn, f2.at("divisor"), c).passed());
  CHECK(check_divisor(64, fn, f2.at("corrected_divisor"), c).passed());
}

TEST_CASE("lattice consistency holds at high precision") {
  for (int n : {36, 64}) {
    const mpnum::PrecisionContext ctx{120, 10, 100000};
    CHECK_NOTHROW(ellper::lattice(ecdiv::Curve::from_conductor(n), ctx));
  }
}

TEST_CASE("cli exit codes") {
  CHECK(cli("verify-periods --curve 64") == 0);
  CHECK(cli("verify-identity --curve 36 --digits 10") == 2);
  CHECK(cli("verify-identity --curve 50") == 2);
  CHECK(cli("no-such-command") == 2);
  CHECK(cli("verify-identity --source file") == 2);
  CHECK(cli("divisor --curve 64 --function 'u - 2' --divisor '4[P0] - 4[O]'") == 1);
  CHECK(cli("divisor --curve 64 --function 'u - 2' --divisor '2[P0] - 2[O]'") == 0);
  CHECK(cli("hyp --params 1/2,1/2") == 2);
  CHECK(cli("--claims /nonexistent.json verify-bloch --curve 36") == 1);
}

TEST_CASE("cli coefficient file round trip") {
  const auto csv = scratch("cmlab_coeffs.csv");
  REQUIRE(cli("coeffs --curve 36 --n-max 2000", csv) == 0);
  CHECK(cli("verify-identity --curve 36 --source file --an-file " + csv.string()) == 0);
  std::filesystem::remove(csv);
}

TEST_CASE("deterministic json output is byte-identical") {
  const auto a = scratch("cmlab_det_a.json"), b = scratch("cmlab_det_b.json");
  REQUIRE(cli("--report json --deterministic verify-bloch --curve 64", a) == 0);
  REQUIRE(cli("--report json --deterministic verify-bloch --curve 64", b) == 0);
  CHECK(slurp(a) == slurp(b));
  const auto j = nlohmann::json::parse(slurp(a));
  REQUIRE(j.is_array());
  for (const auto& r : j) CHECK(r.at("timing").is_null());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

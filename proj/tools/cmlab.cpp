// cmlab: command-line front end for the verification checks.

#include "cmlab/error.hpp"
#include "cmlab/hecke/hecke.hpp"
#include "cmlab/hyp/hyp3f2.hpp"
#include "cmlab/ksym/field.hpp"
#include "cmlab/ksym/local.hpp"
#include "cmlab/verify/checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cmlab;
using verify::Reports;
using verify::VerificationReport;

namespace {

struct Globals {
  std::string report = "text";
  bool deterministic = false;
  std::string claims_path;
};

verify::Claims load_claims(const Globals& g) {
  return g.claims_path.empty() ? verify::Claims::load_default() : verify::Claims::load(g.claims_path);
}

int emit(const Reports& rs, const Globals& g) {
  bool ok = true;
  for (const auto& r : rs) ok = ok && r.status != verify::Status::fail;
  if (g.report == "json") {
    std::cout << nlohmann::json(rs).dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : rs) {
      std::cout << verify::text_line(r) << '\n';
      passed += r.passed() ? 1 : 0;
    }
    std::cout << passed << '/' << rs.size() << " passed\n";
  }
  return ok ? 0 : 1;
}

std::vector<mpq_class> parse_rationals(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw Error(Errc::parse, "empty entry in '" + text + "'");
    mpq_class q;
    if (q.set_str(item.substr(b, e - b + 1), 10) != 0) throw Error(Errc::parse, "not a rational: '" + item + "'");
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

ecdiv::Point point_arg(int curve, const std::string& text, const verify::Claims& claims) {
  if (text.find('(') == std::string::npos && text != "inf") return claims.point(curve, text);
  const ecdiv::Divisor d = ecdiv::parse_divisor(text);
  if (d.size() != 1 || d.begin()->second != 1) throw Error(Errc::parse, "expected a single point, got '" + text + "'");
  return d.begin()->first;
}

ksym::CurveTag tag_for(int curve) { return curve == 36 ? ksym::CurveTag::e36 : ksym::CurveTag::e64; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and exact checks for the conductor 36 and 64 CM elliptic curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--report", g.report, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--deterministic", g.deterministic, "Omit timings so output is byte-stable");
  app.add_option("--claims", g.claims_path, "Claims file (default: $CMLAB_CLAIMS or the shipped file)");

  int curve = 36;
  int digits = 30;
  std::string source = "cm";
  std::string an_file;
  long n_max = 1000;
  auto curve_opt = [&](CLI::App* s) { s->add_option("--curve", curve, "Conductor")->check(CLI::IsMember({36, 64})); };
  auto digits_opt = [&](CLI::App* s) { s->add_option("--digits", digits, "Decimal digits (at least 30)")->check(CLI::Range(30, 2000)); };
  auto source_opt = [&](CLI::App* s) {
    s->add_option("--source", source, "Coefficient source")->check(CLI::IsMember({"cm", "pointcount", "eta", "file"}));
    s->add_option("--an-file", an_file, "CSV of n,a_n used by --source file");
  };

  auto* identity = app.add_subcommand("verify-identity", "L*(E,0) against the hypergeometric side");
  curve_opt(identity);
  digits_opt(identity);
  source_opt(identity);

  auto* bloch = app.add_subcommand("verify-bloch", "Bloch-map images and the Steinberg step");
  curve_opt(bloch);

  app.add_subcommand("rosset-tate", "Two-symbol trace computation on conductor 64");

  auto* periods = app.add_subcommand("verify-periods", "Real period, Omega and the scale factor");
  curve_opt(periods);
  digits_opt(periods);

  auto* labels = app.add_subcommand("verify-torsion-labels", "Torsion points as classes of O_K / nu");
  curve_opt(labels);
  digits_opt(labels);

  auto* coeffs = app.add_subcommand("coeffs", "Print n,a_n as CSV");
  curve_opt(coeffs);
  source_opt(coeffs);
  coeffs->add_option("--n-max", n_max, "Last index")->check(CLI::PositiveNumber);

  std::string params, ft;
  auto* hyp = app.add_subcommand("hyp", "Evaluate 3F2(a1,a2,a3;b1,b2;1) or F~(alpha,beta)");
  auto* params_opt = hyp->add_option("--params", params, "a1,a2,a3,b1,b2");
  auto* ft_opt = hyp->add_option("--ftilde", ft, "alpha,beta");
  params_opt->excludes(ft_opt);
  digits_opt(hyp);

  std::string f_text, g_text, at_text, div_text;
  auto* tame = app.add_subcommand("tame", "Tame symbol {f, g} at a point");
  curve_opt(tame);
  tame->add_option("--f", f_text, "Function in u, v")->required();
  tame->add_option("--g", g_text, "Function in u, v")->required();
  tame->add_option("--at", at_text, "Point name or coordinates such as \"(2, 4)\" or inf")->required();

  long scale = 1;
  auto* divisor = app.add_subcommand("divisor", "Check the divisor of a function");
  curve_opt(divisor);
  divisor->add_option("--function", f_text, "Function in u, v")->required();
  divisor->add_option("--divisor", div_text, "Divisor such as \"2[P0] - [Q0]\"")->required();
  divisor->add_option("--scale", scale, "Multiplier applied to the divisor");

  auto* all = app.add_subcommand("verify-all", "Every check, grouped by acceptance criterion");
  digits_opt(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  verify::Options opt;
  opt.ctx.digits = digits;
  try {
    opt.source = hecke::source_from_string(source);
    opt.an_file = an_file;
    if (opt.source == hecke::CoeffSource::file && an_file.empty()) {
      std::cerr << "--source file needs --an-file\n";
      return 2;
    }
    const bool det = g.deterministic;

    if (*identity) return emit({verify::timed([&] { return verify::check_identity(curve, opt); }, det)}, g);
    if (*bloch) {
      const auto claims = load_claims(g);
      return emit(verify::timed([&] { return verify::check_bloch(curve, claims); }, det), g);
    }
    if (app.got_subcommand("rosset-tate")) {
      const auto claims = load_claims(g);
      return emit(verify::timed([&] { return verify::check_rosset_tate(claims); }, det), g);
    }
    if (*periods) {
      const auto claims = load_claims(g);
      return emit(verify::timed([&] { return verify::check_periods(curve, opt, claims); }, det), g);
    }
    if (*labels) {
      const auto claims = load_claims(g);
      return emit(verify::timed([&] { return verify::check_torsion_labels(curve, opt, claims); }, det), g);
    }
    if (*coeffs) {
      const auto t = hecke::build_coeffs(hecke::CurveId::from_conductor(curve), n_max, opt.source, an_file);
      hecke::write_coeff_file(t, std::cout);
      return 0;
    }
    if (*hyp) {
      mpnum::ArbReal v;
      std::string what;
      if (!ft.empty()) {
        const auto q = parse_rationals(ft);
        if (q.size() != 2) {
          std::cerr << "--ftilde takes two values\n";
          return 2;
        }
        v = hyp::ftilde({q[0], q[1]}, opt.ctx);
        what = "ftilde(" + ft + ")";
      } else {
        if (params.empty()) {
          std::cerr << "hyp needs --params or --ftilde\n";
          return 2;
        }
        const auto q = parse_rationals(params);
        if (q.size() != 5) {
          std::cerr << "--params takes five values\n";
          return 2;
        }
        v = hyp::f32_unit({q[0], q[1], q[2], q[3], q[4]}, opt.ctx);
        what = "3F2(" + params + "; 1)";
      }
      if (g.report == "json") {
        std::cout << nlohmann::json{{"value", v.str(digits)}, {"abs_err", v.err}, {"expression", what}}.dump(2)
                  << '\n';
      } else {
        std::cout << what << " = " << v.str(digits) << '\n';
      }
      return 0;
    }
    if (*tame) {
      const auto claims = load_claims(g);
      const auto tag = tag_for(curve);
      const auto p = point_arg(curve, at_text, claims);
      const auto val = ksym::tame_symbol(ksym::parse_function(tag, f_text), ksym::parse_function(tag, g_text),
                                         ksym::Place::from_point(tag, p));
      if (g.report == "json") {
        std::cout << nlohmann::json{{"f", f_text}, {"g", g_text}, {"at", at_text}, {"value", val.str()}}.dump(2) << '\n';
      } else {
        std::cout << "{" << f_text << ", " << g_text << "} at " << at_text << " = " << val.str() << '\n';
      }
      return 0;
    }
    if (*divisor) {
      const auto claims = load_claims(g);
      return emit({verify::timed([&] { return verify::check_divisor(curve, f_text, div_text, claims, scale); }, det)}, g);
    }
    if (*all) {
      const auto claims = load_claims(g);
      const auto crit = verify::run_acceptance(claims, opt);
      Reports rs;
      for (const auto& c : crit) rs.insert(rs.end(), c.reports.begin(), c.reports.end());
      std::stable_sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
      if (det) {
        for (auto& r : rs) r.timing.reset();
      }
      return emit(rs, g);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::invalid_argument || e.code() == Errc::parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

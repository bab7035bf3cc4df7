// typek — batch verification front-end.
//
// All reports go to stdout and are byte-identical across runs; timing lines
// go to stderr.  Exit codes: 0 every check passed, 1 verification failure,
// 2 usage or parse error.
#include "typek/lattice.hpp"
#include "typek/numeric.hpp"
#include "typek/quad_space.hpp"
#include "typek/report.hpp"
#include "typek/series.hpp"
#include "typek/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using typek::Int;
using typek::Lattice;
using typek::Report;

// "1024 = 2^10" when the factorization is informative, else just the number.
std::string disc_display(const Int& d) {
  Int a = typek::iabs(d);
  std::ostringstream os;
  os << a;
  if (a <= 3) return os.str();
  std::string factored;
  for (const auto& [p, e] : typek::factorize(a)) {
    if (!factored.empty()) factored += "*";
    std::ostringstream ps;
    ps << p;
    factored += ps.str();
    if (e > 1) factored += "^" + std::to_string(e);
  }
  if (factored != os.str()) os << " = " << factored;
  return os.str();
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct VerifyOptions {
  std::string suite;
  int trunc = 0;  // 0 = per-suite default
  bool json = false;
  std::string report_file;
  int jobs = 1;
};

int run_verify(const VerifyOptions& o) {
  std::vector<Report> reports;
  auto timed = [](const std::string& name, const std::function<Report()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = fn();
    std::cerr << "# " << name << ": " << seconds_since(t0) << " s\n";
    return r;
  };
  if (o.suite == "all") {
    auto t0 = std::chrono::steady_clock::now();
    reports = typek::verify_all(o.jobs);
    std::cerr << "# all: " << seconds_since(t0) << " s\n";
  } else if (o.suite == "duality") {
    reports.push_back(timed(o.suite, [] { return typek::verify_duality(); }));
  } else if (o.suite == "brauer") {
    reports.push_back(timed(o.suite, [] { return typek::verify_brauer(); }));
  } else if (o.suite == "coinv-det") {
    reports.push_back(timed(o.suite, [] { return typek::verify_coinv_det(); }));
  } else if (o.suite == "enriques") {
    reports.push_back(timed(o.suite, [] { return typek::verify_enriques(); }));
  } else if (o.suite == "pf-d12") {
    int t = o.trunc > 0 ? o.trunc : 8;
    reports.push_back(timed(o.suite, [t] { return typek::verify_pf_d12(t); }));
  } else if (o.suite == "pf-d8") {
    int t = o.trunc > 0 ? o.trunc : 6;
    reports.push_back(timed(o.suite, [t] { return typek::verify_pf_d8(t); }));
  } else if (o.suite == "pf-elliptic") {
    int t = o.trunc > 0 ? o.trunc : 20;
    reports.push_back(timed(o.suite, [t] { return typek::verify_pf_elliptic(t); }));
  } else if (o.suite == "proj-models") {
    reports.push_back(timed(o.suite, [] { return typek::verify_proj_models(); }));
  }

  bool ok = true;
  for (const Report& r : reports) ok = ok && r.all_passed();
  std::string json_text =
      reports.size() == 1 ? reports[0].to_json() : typek::reports_to_json(reports);
  if (o.json)
    std::cout << json_text;
  else
    std::cout << (reports.size() == 1 ? reports[0].to_text()
                                      : typek::reports_to_text(reports));
  if (!o.report_file.empty()) {
    std::ofstream out(o.report_file, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report file '" << o.report_file << "'\n";
      return 1;
    }
    out << json_text;
  }
  return ok ? 0 : 1;
}

int run_lattice_info(const std::string& expr, bool json) {
  Lattice l = typek::parse_lattice(expr);
  typek::Signature s = typek::signature(l);
  Int d = typek::disc(l);
  bool even = typek::is_even(l), uni = typek::is_unimodular(l);
  if (json) {
    nlohmann::ordered_json j;
    j["expr"] = expr;
    j["rank"] = static_cast<long>(l.rank());
    j["signature"] = {s.pos, s.neg, s.zero};
    std::ostringstream ds;
    ds << d;
    j["disc"] = ds.str();
    j["even"] = even;
    j["unimodular"] = uni;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << expr << ": rank " << l.rank() << ", signature (" << s.pos << "," << s.neg
              << ")";
    if (s.zero) std::cout << " + " << s.zero << " null";
    std::cout << ", |disc| " << disc_display(d) << ", " << (even ? "even" : "odd");
    if (uni) std::cout << ", unimodular";
    std::cout << "\n";
  }
  return 0;
}

int run_lattice_eq(const std::string& e1, const std::string& e2, bool json) {
  Lattice a = typek::parse_lattice(e1), b = typek::parse_lattice(e2);
  typek::QEquivalence eq = typek::q_equivalent(a, b);
  if (json) {
    nlohmann::ordered_json j;
    j["lhs"] = {{"expr", e1}, {"invariants", eq.lhs.summary()}};
    j["rhs"] = {{"expr", e2}, {"invariants", eq.rhs.summary()}};
    j["equivalent"] = eq.equivalent;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << e1 << ": " << eq.lhs.summary() << "\n"
              << e2 << ": " << eq.rhs.summary() << "\n"
              << "equivalent over Q: " << (eq.equivalent ? "yes" : "no") << "\n";
  }
  return eq.equivalent ? 0 : 1;
}

int run_series(const std::string& name, int trunc) {
  typek::Rat t(trunc);
  typek::PuiseuxSeries s(t);
  if (name == "theta2")
    s = typek::theta2(t);
  else if (name == "theta3")
    s = typek::theta3(t);
  else if (name == "theta4")
    s = typek::theta4(t);
  else
    s = typek::eta(t);
  std::cout << name << " = " << s.to_string("q") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the lattice tables and mirror-symmetry series"};
  app.require_subcommand(1);
  int rc = 0;

  // verify ------------------------------------------------------------------
  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", vo.suite,
                   "one of: all, duality, brauer, coinv-det, enriques, pf-d12, pf-d8, "
                   "pf-elliptic, proj-models")
      ->required()
      ->check(CLI::IsMember({"all", "duality", "brauer", "coinv-det", "enriques", "pf-d12",
                             "pf-d8", "pf-elliptic", "proj-models"}));
  verify
      ->add_option("--trunc", vo.trunc,
                   "truncation order (defaults: pf-d12 8, pf-d8 6, pf-elliptic 20; "
                   "ignored by the table suites)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", vo.json, "print the report as JSON");
  verify->add_option("--report", vo.report_file, "also write the JSON report to FILE");
  verify->add_option("--jobs", vo.jobs, "suites run in parallel for 'verify all'")
      ->check(CLI::PositiveNumber);
  verify->callback([&] { rc = run_verify(vo); });

  // lattice -----------------------------------------------------------------
  CLI::App* lattice = app.add_subcommand("lattice", "inspect or compare lattices");
  lattice->require_subcommand(1);
  std::string info_expr;
  bool info_json = false;
  CLI::App* info = lattice->add_subcommand("info", "rank, signature, discriminant, parity");
  info->add_option("expr", info_expr, "lattice expression, e.g. \"U(2)+E8(-2)\"")
      ->required();
  info->add_flag("--json", info_json, "print as JSON");
  info->callback([&] { rc = run_lattice_info(info_expr, info_json); });

  std::string eq1, eq2;
  bool eq_json = false;
  CLI::App* eq = lattice->add_subcommand("eq", "decide rational equivalence of two lattices");
  eq->add_option("expr1", eq1, "first lattice expression")->required();
  eq->add_option("expr2", eq2, "second lattice expression")->required();
  eq->add_flag("--json", eq_json, "print as JSON");
  eq->callback([&] { rc = run_lattice_eq(eq1, eq2, eq_json); });

  // series ------------------------------------------------------------------
  std::string series_name;
  int series_trunc = 8;
  CLI::App* series = app.add_subcommand("series", "print a theta or eta q-expansion");
  series->add_option("name", series_name, "one of: theta2, theta3, theta4, eta")
      ->required()
      ->check(CLI::IsMember({"theta2", "theta3", "theta4", "eta"}));
  series->add_option("--trunc", series_trunc, "truncation exponent (default 8)")
      ->check(CLI::PositiveNumber);
  series->callback([&] { rc = run_series(series_name, series_trunc); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and the usage hint to stderr
    return 2;
  } catch (const typek::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

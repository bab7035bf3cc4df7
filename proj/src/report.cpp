#include "typek/report.hpp"

#include "typek/numeric.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace typek {

void Report::check(const std::string& id, const std::string& anchor, bool passed,
                   const std::string& expected, const std::string& got) {
  add(CheckResult{id, anchor, passed, false, expected, got});
}

void Report::check_eq(const std::string& id, const std::string& anchor,
                      const std::string& expected, const std::string& got) {
  add(CheckResult{id, anchor, expected == got, false, expected, got});
}

int Report::passed_count() const {
  int n = 0;
  for (const CheckResult& c : checks_)
    if (c.passed && !c.skipped) ++n;
  return n;
}

int Report::failed_count() const {
  int n = 0;
  for (const CheckResult& c : checks_)
    if (!c.passed && !c.skipped) ++n;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << suite_ << "\n";
  for (const CheckResult& c : checks_) {
    os << (c.skipped ? "[SKIP] " : c.passed ? "[PASS] " : "[FAIL] ") << c.id << "  "
       << c.anchor << "\n";
    if (!c.passed && !c.skipped) {
      if (!c.expected.empty()) os << "       expected: " << c.expected << "\n";
      if (!c.got.empty()) os << "       got:      " << c.got << "\n";
    }
  }
  os << "-- " << suite_ << ": " << passed_count() << " passed, " << failed_count()
     << " failed\n";
  return os.str();
}

namespace {

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks()) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    jc["status"] = c.skipped ? "skip" : c.passed ? "pass" : "fail";
    jc["expected"] = c.expected;
    jc["got"] = c.got;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", r.passed_count()}, {"fail", r.failed_count()}};
  return j;
}

Report report_from(const nlohmann::ordered_json& j) {
  if (!j.contains("suite") || !j.contains("checks"))
    throw ParseError("report: missing 'suite' or 'checks'", 0);
  Report r(j.at("suite").get<std::string>());
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.id = jc.at("id").get<std::string>();
    c.anchor = jc.at("anchor").get<std::string>();
    std::string status = jc.at("status").get<std::string>();
    if (status != "pass" && status != "fail" && status != "skip")
      throw ParseError("report: bad status '" + status + "'", 0);
    c.passed = status == "pass";
    c.skipped = status == "skip";
    c.expected = jc.value("expected", std::string());
    c.got = jc.value("got", std::string());
    r.add(std::move(c));
  }
  return r;
}

}  // namespace

std::string Report::to_json() const { return report_json(*this).dump(2) + "\n"; }

std::string reports_to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  int pass = 0, fail = 0;
  for (const Report& r : reports) {
    os << r.to_text();
    pass += r.passed_count();
    fail += r.failed_count();
  }
  os << "== total: " << pass << " passed, " << fail << " failed\n";
  return os.str();
}

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  int pass = 0, fail = 0;
  for (const Report& r : reports) {
    suites.push_back(report_json(r));
    pass += r.passed_count();
    fail += r.failed_count();
  }
  j["suites"] = std::move(suites);
  j["summary"] = {{"pass", pass}, {"fail", fail}};
  return j.dump(2) + "\n";
}

std::vector<Report> reports_from_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  std::vector<Report> out;
  if (j.contains("suites")) {
    for (const auto& js : j.at("suites")) out.push_back(report_from(js));
  } else {
    out.push_back(report_from(j));
  }
  return out;
}

}  // namespace typek

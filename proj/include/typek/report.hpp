// Structured pass/fail reporting for the verification suites.  Renderings
// are deterministic: equal inputs produce byte-identical text and JSON.
#pragma once

#include <string>
#include <vector>

namespace typek {

struct CheckResult {
  std::string id;        // stable machine-readable identifier, e.g. "duality/D12"
  std::string anchor;    // the mathematical claim being checked, in words
  bool passed = false;
  bool skipped = false;  // skipped checks count as neither passed nor failed
  std::string expected;  // rendered expected value (may be empty)
  std::string got;       // rendered actual value (may be empty)
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void check(const std::string& id, const std::string& anchor, bool passed,
             const std::string& expected = "", const std::string& got = "");
  // Comparison helper: passes iff expected == got (as rendered strings).
  void check_eq(const std::string& id, const std::string& anchor, const std::string& expected,
                const std::string& got);

  int passed_count() const;
  int failed_count() const;
  bool all_passed() const { return failed_count() == 0; }

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

// Multi-suite renderings with a grand total.
std::string reports_to_text(const std::vector<Report>& reports);
std::string reports_to_json(const std::vector<Report>& reports);

// Inverse of reports_to_json, used to round-trip report files.
std::vector<Report> reports_from_json(const std::string& text);

}  // namespace typek

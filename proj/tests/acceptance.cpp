// Acceptance gate: each criterion runs one verification suite to completion
// and must both pass every check and finish inside its time budget.  One
// line is printed per criterion; the exit code is the number of failures.
#include "typek/report.hpp"
#include "typek/verify.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<typek::Report()>& run) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  bool ok = false;
  int passed = 0, failed = 0;
  std::string note;
  try {
    typek::Report r = run();
    passed = r.passed_count();
    failed = r.failed_count();
    ok = r.all_passed();
    if (!ok) note = "checks failed";
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(clock::now() - t0).count();
  if (elapsed >= budget_seconds) {
    ok = false;
    note = note.empty() ? "over time budget" : note + "; over time budget";
  }
  if (!ok) ++failures;
  std::printf("[%s] %d %-12s %4d passed %3d failed  %7.3fs (budget %gs)%s%s\n",
              ok ? "PASS" : "FAIL", number, name.c_str(), passed, failed, elapsed,
              budget_seconds, note.empty() ? "" : "  -- ", note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "brauer", 1.0, [] { return typek::verify_brauer(); });
  criterion(2, "duality", 1.0, [] { return typek::verify_duality(); });
  criterion(3, "coinv-det", 1.0, [] { return typek::verify_coinv_det(); });
  criterion(4, "enriques", 5.0, [] { return typek::verify_enriques(); });
  criterion(5, "pf-d12", 60.0, [] { return typek::verify_pf_d12(8); });
  criterion(6, "pf-elliptic", 10.0, [] { return typek::verify_pf_elliptic(20); });
  criterion(7, "pf-d8", 30.0, [] { return typek::verify_pf_d8(6, 20); });
  criterion(8, "proj-models", 5.0, [] { return typek::verify_proj_models(); });
  criterion(9, "properties", 30.0, [] { return typek::verify_properties(200, 200); });
  std::printf("acceptance: %d/9 passed\n", 9 - failures);
  return failures;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/report.hpp"

#include "typek/numeric.hpp"

#include <string>

using namespace typek;

namespace {

Report sample() {
  Report r("demo");
  r.check("demo/ok", "one equals one", true);
  r.check_eq("demo/eq", "rendered strings match", "42", "42");
  r.check("demo/bad", "two equals three", false, "2", "3");
  CheckResult skip;
  skip.id = "demo/skipped";
  skip.anchor = "not attempted here";
  skip.skipped = true;
  r.add(skip);
  return r;
}

}  // namespace

TEST_CASE("counts ignore skipped checks") {
  Report r = sample();
  CHECK(r.passed_count() == 2);
  CHECK(r.failed_count() == 1);
  CHECK(!r.all_passed());

  Report ok("fine");
  ok.check("fine/only", "trivially true", true);
  CHECK(ok.all_passed());
  CHECK(Report("empty").all_passed());
}

TEST_CASE("text rendering") {
  std::string text = sample().to_text();
  CHECK(text.find("== demo\n") == 0);
  CHECK(text.find("[PASS] demo/ok  one equals one\n") != std::string::npos);
  CHECK(text.find("[FAIL] demo/bad  two equals three\n") != std::string::npos);
  CHECK(text.find("expected: 2") != std::string::npos);
  CHECK(text.find("got:      3") != std::string::npos);
  CHECK(text.find("[SKIP] demo/skipped  not attempted here\n") != std::string::npos);
  CHECK(text.find("-- demo: 2 passed, 1 failed\n") != std::string::npos);

  // Deterministic: equal inputs give byte-identical output.
  CHECK(sample().to_text() == text);

  std::string multi = reports_to_text({sample(), sample()});
  CHECK(multi.find("== total: 4 passed, 2 failed\n") != std::string::npos);
}

TEST_CASE("json round trip") {
  std::vector<Report> in = {sample(), Report("empty")};
  std::string json = reports_to_json(in);
  CHECK(reports_to_json(in) == json);  // deterministic

  std::vector<Report> out = reports_from_json(json);
  REQUIRE(out.size() == 2);
  CHECK(out[0].suite() == "demo");
  CHECK(out[1].suite() == "empty");
  REQUIRE(out[0].checks().size() == 4);
  CHECK(out[0].checks()[0].passed);
  CHECK(out[0].checks()[2].expected == "2");
  CHECK(out[0].checks()[2].got == "3");
  CHECK(out[0].checks()[3].skipped);
  CHECK(!out[0].checks()[3].passed);
  CHECK(out[0].passed_count() == 2);
  CHECK(out[0].failed_count() == 1);

  // A single-suite object parses as a one-element list.
  std::vector<Report> single = reports_from_json(sample().to_json());
  REQUIRE(single.size() == 1);
  CHECK(single[0].suite() == "demo");
  CHECK(single[0].checks().size() == 4);
}

TEST_CASE("json structure carries status strings") {
  std::string json = sample().to_json();
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(json.find("\"status\": \"skip\"") != std::string::npos);
  CHECK(json.find("\"suite\": \"demo\"") != std::string::npos);
  CHECK(json.find("\"summary\"") != std::string::npos);
}

TEST_CASE("malformed report files are rejected") {
  CHECK_THROWS_AS(reports_from_json("{\"suites\": [{\"suite\": \"x\"}]}"), ParseError);
  std::string bad_status = R"({
    "suite": "x",
    "checks": [{"id": "a", "anchor": "b", "status": "maybe"}],
    "summary": {"pass": 0, "fail": 0}
  })";
  CHECK_THROWS_AS(reports_from_json(bad_status), ParseError);
  CHECK_THROWS_AS(reports_from_json("not json"), std::exception);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/verify.hpp"

#include "typek/report.hpp"

using namespace typek;

namespace {

void expect_clean(const Report& r) {
  INFO(r.to_text());
  CHECK(r.all_passed());
  CHECK(r.failed_count() == 0);
  CHECK(r.passed_count() > 0);
}

}  // namespace

TEST_CASE("table suites pass") {
  expect_clean(verify_duality());
  expect_clean(verify_brauer());
  expect_clean(verify_coinv_det());
}

TEST_CASE("involution suite passes") { expect_clean(verify_enriques()); }

TEST_CASE("projective model suite passes") { expect_clean(verify_proj_models()); }

TEST_CASE("series suites pass at reduced depth") {
  expect_clean(verify_pf_d12(2));
  expect_clean(verify_pf_elliptic(6));
  expect_clean(verify_pf_d8(3, 5));
}

TEST_CASE("property suite passes at reduced trial counts") {
  expect_clean(verify_properties(25, 25));
}

TEST_CASE("full run covers the eight suites in a fixed order") {
  std::vector<Report> all = verify_all(2);
  REQUIRE(all.size() == 8);
  CHECK(all[0].suite() == "duality");
  CHECK(all[1].suite() == "brauer");
  CHECK(all[2].suite() == "coinv-det");
  CHECK(all[3].suite() == "enriques");
  CHECK(all[4].suite() == "pf-d12");
  CHECK(all[5].suite() == "pf-d8");
  CHECK(all[6].suite() == "pf-elliptic");
  CHECK(all[7].suite() == "proj-models");
  for (const Report& r : all) expect_clean(r);

  // Parallel and serial runs render identically.
  std::vector<Report> serial = verify_all(1);
  CHECK(reports_to_json(serial) == reports_to_json(all));
}

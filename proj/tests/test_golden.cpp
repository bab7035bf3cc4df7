#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/golden.hpp"

#include "typek/numeric.hpp"

#include <fstream>
#include <sstream>
#include <string>

using namespace typek;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("dumps match the committed golden files byte for byte") {
  CHECK(golden_dump("pf-d12", 8) == read_file("pf-d12.txt"));
  CHECK(golden_dump("pf-d8", 6) == read_file("pf-d8.txt"));
  CHECK(golden_dump("pf-elliptic", 20) == read_file("pf-elliptic.txt"));
}

TEST_CASE("dump format is line oriented and self describing") {
  std::string d = golden_dump("pf-d8", 3);
  CHECK(d.find("family = pf-d8\n") == 0);
  CHECK(d.find("trunc = 3\n") != std::string::npos);
  CHECK(d.find("phi0 = 1 + 12*z3 + 12*z2 + 12*z1 + ") != std::string::npos);
  CHECK(d.back() == '\n');

  // Deterministic rendering.
  CHECK(golden_dump("pf-elliptic", 6) == golden_dump("pf-elliptic", 6));

  CHECK_THROWS_AS(golden_dump("nope", 8), Error);
  CHECK_THROWS_AS(golden_dump("pf-d12", 1), Error);
}

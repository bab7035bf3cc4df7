// Regenerates the committed golden files:
//   golden_dump pf-d12 8   > data/golden/pf-d12.txt
//   golden_dump pf-d8 6    > data/golden/pf-d8.txt
//   golden_dump pf-elliptic 20 > data/golden/pf-elliptic.txt
#include "typek/golden.hpp"

#include "typek/numeric.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: golden_dump <pf-d12|pf-d8|pf-elliptic> <trunc>\n");
    return 2;
  }
  try {
    int trunc = std::atoi(argv[2]);
    std::fputs(typek::golden_dump(argv[1], trunc).c_str(), stdout);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "golden_dump: %s\n", e.what());
    return 1;
  }
}

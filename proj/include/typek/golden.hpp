// Canonical text dumps of the series data computed for each operator
// family.  One "name = series" line per entry, monomials in graded
// lexicographic order; equal inputs give byte-identical dumps, so the
// golden-file tests can compare against committed reference files.
#pragma once

#include <string>

namespace typek {

// `family` is one of "pf-d12", "pf-d8", "pf-elliptic"; `trunc` is the total
// degree for the two- and three-variable families and the number of q^(1/6)
// steps for the one-variable family.
std::string golden_dump(const std::string& family, int trunc);

}  // namespace typek

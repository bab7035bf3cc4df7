#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/lattice.hpp"

using namespace typek;

TEST_CASE("standard blocks") {
  CHECK(disc(lattice_U()) == -1);
  CHECK(signature(lattice_U()) == Signature{1, 1, 0});
  CHECK(is_even(lattice_U()));
  CHECK(is_unimodular(lattice_U()));

  CHECK(disc(lattice_A(1)) == 2);
  CHECK(disc(lattice_A(2)) == 3);
  CHECK(disc(lattice_D(4)) == 4);
  CHECK(disc(lattice_E(6)) == 3);
  CHECK(disc(lattice_E(7)) == 2);
  CHECK(disc(lattice_E(8)) == 1);
  CHECK(is_even(lattice_E(8)));
  CHECK(signature(lattice_E(8)) == Signature{8, 0, 0});

  CHECK(disc(lattice_rank1(Int(-4))) == -4);
  CHECK(!is_even(lattice_rank1(Int(1))));

  Lattice k3 = lattice_K3();
  CHECK(k3.rank() == 22);
  CHECK(signature(k3) == Signature{3, 19, 0});
  CHECK(disc(k3) == -1);
  CHECK(is_even(k3));
  CHECK(is_unimodular(k3));
}

TEST_CASE("rescale and direct sum") {
  Lattice u2 = rescale(lattice_U(), Int(2));
  CHECK(disc(u2) == -4);
  CHECK(is_even(u2));
  Lattice e8m2 = rescale(lattice_E(8), Int(-2));
  CHECK(disc(e8m2) == 256);
  CHECK(signature(e8m2) == Signature{0, 8, 0});
  Lattice s = direct_sum(u2, e8m2);
  CHECK(s.rank() == 10);
  CHECK(disc(s) == -1024);
}

TEST_CASE("expression parser") {
  Lattice l = parse_lattice("3*U+2*<-4>");
  CHECK(l.rank() == 8);
  CHECK(disc(l) == -16);
  CHECK(signature(l) == Signature{3, 5, 0});

  CHECK(disc(parse_lattice("U(2)+E8(-2)")) == -1024);
  CHECK(disc(parse_lattice("A2(-2)")) == 12);
  CHECK(parse_lattice("K3").rank() == 22);
  CHECK(parse_lattice(" U ( 2 ) + A1 ").rank() == 3);

  CHECK_THROWS_AS(parse_lattice("U(0)"), ParseError);
  CHECK_THROWS_AS(parse_lattice("<0>"), ParseError);
  CHECK_THROWS_AS(parse_lattice("2*"), ParseError);
  CHECK_THROWS_AS(parse_lattice("E9"), ParseError);
  CHECK_THROWS_AS(parse_lattice("D3"), ParseError);
  CHECK_THROWS_AS(parse_lattice("A0"), ParseError);
  CHECK_THROWS_AS(parse_lattice("Q9"), ParseError);
  CHECK_THROWS_AS(parse_lattice("U+"), ParseError);
  CHECK_THROWS_AS(parse_lattice("U junk"), ParseError);
  CHECK_THROWS_AS(parse_lattice(""), ParseError);
}

TEST_CASE("orthogonal complement is saturated") {
  Lattice uu = parse_lattice("2*U");
  IMat span(1, 4);
  span << 1, 0, 1, 0;  // e1 + e2
  Sublattice c = orthogonal_complement(uu, span);
  CHECK(c.lattice.rank() == 3);
  // Complement of an isotropic vector contains it again.
  QMat g = uu.gram().cast<Rat>();
  QMat b = c.basis.cast<Rat>();
  QMat pair = b * g * span.cast<Rat>().transpose();
  for (Eigen::Index i = 0; i < pair.rows(); ++i) CHECK(pair(i, 0) == 0);
}

TEST_CASE("json round trip") {
  Lattice l = parse_lattice("U(2)+A2(-1)");
  Lattice back = lattice_from_json(lattice_to_json(l));
  CHECK(exact_eq(l.gram(), back.gram()));
  CHECK(back.label() == l.label());
  CHECK_THROWS(lattice_from_json("{"));
}

TEST_CASE("gram constructor rejects asymmetry") {
  IMat g(2, 2);
  g << 0, 1, 2, 0;
  CHECK_THROWS_AS((void)Lattice{g}, Error);
}

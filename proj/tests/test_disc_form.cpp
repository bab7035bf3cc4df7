#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/disc_form.hpp"
#include "typek/lattice.hpp"

#include <algorithm>

using namespace typek;

TEST_CASE("discriminant group of U(2)") {
  DiscGroup g = discriminant_group(parse_lattice("U(2)"));
  REQUIRE(g.orders.size() == 2);
  CHECK(g.orders[0] == 2);
  CHECK(g.orders[1] == 2);
  CHECK(g.order() == 4);
  // Both generators are isotropic; their sum has q = 1.
  CHECK(q_value(g, {Int(1), Int(0)}) == 0);
  CHECK(q_value(g, {Int(0), Int(1)}) == 0);
  CHECK(q_value(g, {Int(1), Int(1)}) == 1);
  CHECK(pairing_value(g, {Int(1), Int(0)}, {Int(0), Int(1)}) == make_rat(Int(1), Int(2)));
}

TEST_CASE("discriminant group of rank-one lattices") {
  DiscGroup g = discriminant_group(parse_lattice("<2>"));
  REQUIRE(g.orders.size() == 1);
  CHECK(g.orders[0] == 2);
  CHECK(q_value(g, {Int(1)}) == make_rat(Int(1), Int(2)));
  DiscGroup h = discriminant_group(parse_lattice("<-2>"));
  CHECK(q_value(h, {Int(1)}) == make_rat(Int(3), Int(2)));
}

TEST_CASE("discriminant group of A2 and its negative") {
  DiscGroup g = discriminant_group(lattice_A(2));
  REQUIRE(g.orders.size() == 1);
  CHECK(g.orders[0] == 3);
  CHECK(q_value(g, {Int(1)}) == make_rat(Int(2), Int(3)));
  CHECK(q_value(g, {Int(2)}) == make_rat(Int(2), Int(3)));

  DiscFingerprint fa = fingerprint(lattice_A(2));
  DiscFingerprint fn = fingerprint(rescale(lattice_A(2), Int(-1)));
  CHECK(!(fa == fn));
  CHECK(negate(fn) == fa);
  CHECK(fingerprints_equal(lattice_A(2), rescale(lattice_A(2), Int(-1)), true));
  CHECK(!fingerprints_equal(lattice_A(2), rescale(lattice_A(2), Int(-1))));
}

TEST_CASE("unimodular lattices have trivial discriminant group") {
  DiscGroup g = discriminant_group(lattice_U());
  CHECK(g.orders.empty());
  CHECK(g.order() == 1);
}

TEST_CASE("discriminant group requires an even nondegenerate lattice") {
  CHECK_THROWS_AS(discriminant_group(parse_lattice("<1>")), Error);
  IMat z = IMat::Zero(1, 1);
  CHECK_THROWS_AS(discriminant_group(Lattice(z)), Error);
}

TEST_CASE("fingerprint value multiset of U(2)") {
  DiscFingerprint f = fingerprint(parse_lattice("U(2)"));
  REQUIRE(f.group_type.size() == 2);
  std::vector<std::pair<Int, Rat>> want = {
      {Int(1), Rat(0)}, {Int(2), Rat(0)}, {Int(2), Rat(0)}, {Int(2), Rat(1)}};
  CHECK(f.value_multiset == want);
}

TEST_CASE("overlattice gluing") {
  // <2> + <-2> glued along (x+y)/2 is the hyperbolic plane.
  Lattice l = parse_lattice("<2>+<-2>");
  Overlattice o = overlattice(l, {{Int(1), Int(1)}});
  CHECK(o.index == 2);
  CHECK(disc(o.lattice) == -1);
  CHECK(is_even(o.lattice));
  CHECK(iabs(disc(o.lattice)) * o.index * o.index == iabs(disc(l)));

  // Gluing along a non-isotropic element is rejected.
  CHECK_THROWS_AS(overlattice(parse_lattice("<2>"), {{Int(1)}}), Error);

  // The trivial glue returns the lattice itself.
  Overlattice t = overlattice(l, {});
  CHECK(t.index == 1);
  CHECK(exact_eq(t.lattice.gram(), l.gram()));
}

TEST_CASE("overlattice order law on a rank-four fixture") {
  // A1(-1)^2 + A1^2 glued along the diagonal half-vector.
  Lattice l = parse_lattice("2*<-2>+2*<2>");
  DiscGroup g = discriminant_group(l);
  REQUIRE(g.orders.size() == 4);
  // (1,1,1,1)/2 has q = -1/2 - 1/2 + 1/2 + 1/2 = 0: isotropic.
  Overlattice o = overlattice(l, {{Int(1), Int(1), Int(1), Int(1)}});
  CHECK(o.index == 2);
  CHECK(iabs(disc(o.lattice)) == 4);  // 16 / 2^2
}

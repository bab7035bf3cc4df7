#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/group_action.hpp"
#include "typek/lattice.hpp"

using namespace typek;

namespace {

// The swap of the two U summands inside U + U.
IMat swap_uu() {
  IMat g = IMat::Zero(4, 4);
  g(0, 2) = g(1, 3) = g(2, 0) = g(3, 1) = 1;
  return g;
}

// Negation of the first U summand inside U + U.
IMat neg_first() {
  IMat g = IMat::Identity(4, 4);
  g(0, 0) = g(1, 1) = -1;
  return g;
}

}  // namespace

TEST_CASE("group closure and gram preservation") {
  Lattice uu = parse_lattice("2*U");
  LatticeAction a(uu, {swap_uu()});
  CHECK(a.order() == 2);
  LatticeAction b(uu, {swap_uu(), neg_first()});
  CHECK(b.order() == 8);  // dihedral: swap and block negations

  IMat bad = IMat::Identity(4, 4);
  bad(0, 1) = 1;  // shear does not preserve the hyperbolic form
  CHECK_THROWS_AS(LatticeAction(uu, {bad}), Error);
}

TEST_CASE("invariant and coinvariant sublattices of the swap") {
  Lattice uu = parse_lattice("2*U");
  LatticeAction a(uu, {swap_uu()});
  Sublattice inv = invariant_sublattice(a);
  REQUIRE(inv.lattice.rank() == 2);
  CHECK(iabs(disc(inv.lattice)) == 4);  // U(2)
  CHECK(is_even(inv.lattice));

  Sublattice coin = coinvariant_sublattice(a);
  REQUIRE(coin.lattice.rank() == 2);
  CHECK(iabs(disc(coin.lattice)) == 4);  // the anti-diagonal copy, again U(2)

  CHECK(glue_exponent(a, swap_uu()) == 2);
  CHECK(anti_invariant_torsion(a, swap_uu()) == 0);
}

TEST_CASE("negating one summand") {
  Lattice uu = parse_lattice("2*U");
  LatticeAction a(uu, {neg_first()});
  Sublattice inv = invariant_sublattice(a);
  CHECK(inv.lattice.rank() == 2);
  CHECK(disc(inv.lattice) == -1);  // the untouched U
  CHECK(glue_exponent(a, neg_first()) == 0);
  CHECK(anti_invariant_torsion(a, neg_first()) == 2);
  CHECK(anti_invariant_torsion(uu, neg_first()) == 2);
}

TEST_CASE("glue exponent requires a unimodular ambient lattice") {
  Lattice l = parse_lattice("U(2)");
  IMat m = -IMat::Identity(2, 2);
  LatticeAction a(l, {m});
  CHECK_THROWS_AS(glue_exponent(a, m), Error);
}

TEST_CASE("standard involution model") {
  LatticeAction e = enriques_model();
  CHECK(e.order() == 2);
  CHECK(e.lattice().rank() == 22);
  CHECK(is_unimodular(e.lattice()));
  Sublattice inv = invariant_sublattice(e);
  Sublattice coin = coinvariant_sublattice(e);
  CHECK(inv.lattice.rank() == 10);
  CHECK(coin.lattice.rank() == 12);
  CHECK(inv.lattice.rank() + coin.lattice.rank() == e.lattice().rank());
}

TEST_CASE("coinvariant determinants from eigenvalue data") {
  CHECK(coinv_det({{{2, 8}}}) == 256);
  CHECK(coinv_det({{{3, 6}}}) == 729);
  CHECK(coinv_det({{{2, 6}, {4, 4}}}) == 1024);
  CHECK(coinv_det({{{5, 4}}}) == 625);
  CHECK(coinv_det({{{2, 4}, {3, 4}, {6, 2}}}) == 1296);
  CHECK_THROWS_AS(coinv_det({{{1, 2}}}), Error);

  EigenvalueMultiset ev{{{2, 4}, {3, 4}, {6, 2}}};
  CHECK(ev.total_rank() == 16);
}

TEST_CASE("cyclotomic values at one") {
  CHECK(cyclotomic_value_at_one(2) == 2);
  CHECK(cyclotomic_value_at_one(4) == 2);
  CHECK(cyclotomic_value_at_one(8) == 2);
  CHECK(cyclotomic_value_at_one(3) == 3);
  CHECK(cyclotomic_value_at_one(9) == 3);
  CHECK(cyclotomic_value_at_one(5) == 5);
  CHECK(cyclotomic_value_at_one(6) == 1);
  CHECK(cyclotomic_value_at_one(12) == 1);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
}

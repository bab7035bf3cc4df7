#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/lattice.hpp"
#include "typek/quad_space.hpp"

using namespace typek;

TEST_CASE("hilbert symbol fixtures") {
  CHECK(hilbert_symbol_real(Rat(-1), Rat(-1)) == -1);
  CHECK(hilbert_symbol_real(Rat(1), Rat(-1)) == 1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Int(2)) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), Int(3)) == 1);
  CHECK(hilbert_symbol(Rat(2), Rat(3), Int(2)) == -1);
  CHECK(hilbert_symbol(Rat(2), Rat(3), Int(3)) == -1);
  CHECK(hilbert_symbol(Rat(2), Rat(3), Int(5)) == 1);
  CHECK(hilbert_symbol(Rat(5), Rat(5), Int(5)) == 1);   // (5,5)_5 = (-1|5) = +1
  CHECK(hilbert_symbol(Rat(3), Rat(3), Int(3)) == -1);  // (3,3)_3 = (-1|3) = -1
  // Symbols are symmetric and bimultiplicative.
  CHECK(hilbert_symbol(Rat(6), Rat(10), Int(2)) ==
        hilbert_symbol(Rat(10), Rat(6), Int(2)));
  CHECK(hilbert_symbol(Rat(2) * Rat(3), Rat(5), Int(2)) ==
        hilbert_symbol(Rat(2), Rat(5), Int(2)) * hilbert_symbol(Rat(3), Rat(5), Int(2)));
  CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), Int(2)), Error);
}

TEST_CASE("hasse invariant of diagonal forms") {
  // diag(1, 1): no negative products anywhere.
  CHECK(hasse_invariant({Rat(1), Rat(1)}, Int(2)) == 1);
  CHECK(hasse_invariant_real({Rat(-1), Rat(-1)}) == -1);
  CHECK(hasse_invariant_real({Rat(1), Rat(-1)}) == 1);
}

TEST_CASE("rational invariants of standard lattices") {
  QSpaceInvariants u = qspace_invariants(lattice_U(), {Int(2)});
  CHECK(u.rank == 2);
  CHECK(u.sig == Signature{1, 1, 0});
  CHECK(u.disc_class == -1);

  QSpaceInvariants e8 = qspace_invariants(lattice_E(8), {Int(2)});
  CHECK(e8.rank == 8);
  CHECK(e8.disc_class == 1);
}

TEST_CASE("rational equivalence verdicts") {
  CHECK(q_equivalent(lattice_U(), parse_lattice("<1>+<-1>")).equivalent);
  CHECK(!q_equivalent(lattice_U(), parse_lattice("<1>+<-2>")).equivalent);
  CHECK(q_equivalent(parse_lattice("<1>+<1>"), parse_lattice("<2>+<2>")).equivalent);
  CHECK(!q_equivalent(lattice_A(2), rescale(lattice_A(2), Int(-1))).equivalent);
  CHECK(!q_equivalent(lattice_U(), parse_lattice("3*U")).equivalent);
  // Rescaling by a square keeps the class.
  CHECK(q_equivalent(lattice_A(2), rescale(lattice_A(2), Int(4))).equivalent);
}

TEST_CASE("equivalence records the invariants of both sides") {
  QEquivalence eq = q_equivalent(lattice_U(), parse_lattice("<1>+<-2>"));
  CHECK(eq.lhs.rank == 2);
  CHECK(eq.rhs.rank == 2);
  CHECK(eq.lhs.disc_class == -1);
  CHECK(eq.rhs.disc_class == -2);
  CHECK(!eq.primes.empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/cyclotomic.hpp"

using namespace typek;

TEST_CASE("cyclotomic field arithmetic") {
  Cyc z8 = Cyc::zeta_power(8, 1);
  Cyc z12 = Cyc::zeta_power(12, 1);

  // zeta_8^4 = -1 and zeta_12^6 = -1.
  CHECK(Cyc::zeta_power(8, 4) == Cyc::rational(Rat(-1)));
  CHECK(Cyc::zeta_power(12, 6) == Cyc::rational(Rat(-1)));
  CHECK(Cyc::zeta_power(8, 8) == Cyc::one());
  CHECK(Cyc::zeta_power(12, 12) == Cyc::one());
  CHECK(Cyc::zeta_power(8, -1) == Cyc::zeta_power(8, 7));

  // Reduction modulo the minimal polynomial: zeta_12^4 = zeta_12^2 - 1.
  Cyc z12_4 = Cyc::zeta_power(12, 4);
  CHECK(z12_4 == Cyc::zeta_power(12, 2) - Cyc::one());

  // Multiplication is power addition.
  CHECK(z8 * Cyc::zeta_power(8, 3) == Cyc::zeta_power(8, 4));
  CHECK(z12 * z12 == Cyc::zeta_power(12, 2));

  // Inverses round-trip; zero has none.
  Cyc a = z8 + Cyc::rational(Rat(2));
  CHECK(a * a.inverse() == Cyc::one());
  Cyc b = z12_4 + Cyc::rational(make_rat(Int(1), Int(3)));
  CHECK(b.inverse() * b == Cyc::one());
  CHECK_THROWS_AS(Cyc().inverse(), Error);

  // Rationality detection.
  Rat out;
  CHECK(Cyc::zeta_power(12, 6).is_rational(&out));
  CHECK(out == -1);
  CHECK(!z8.is_rational());
  Cyc i8 = Cyc::zeta_power(8, 2);  // a primitive fourth root
  CHECK(!i8.is_rational());
  CHECK((i8 * i8).is_rational(&out));
  CHECK(out == -1);

  // Mixed arithmetic with plain rationals promotes to the field.
  CHECK(Cyc::rational(Rat(3)) * z8 + z8 == Cyc::rational(Rat(4)) * z8);
  CHECK(Cyc::rational(Rat(3)) + Cyc() == Cyc::rational(Rat(3)));
}

TEST_CASE("two-by-two matrices over a cyclotomic field") {
  Cyc z = Cyc::zeta_power(8, 1);
  CycMat2 d = CycMat2::diagonal(z, z.inverse());
  CycMat2 s = CycMat2::anti_diagonal(Cyc::one(), -Cyc::one());

  CHECK(d.determinant() == Cyc::one());
  CHECK(s.determinant() == Cyc::one());

  // adj(M) * M = det(M) * I.
  CycMat2 prod = d.adjugate() * d;
  CHECK(prod == CycMat2::diagonal(d.determinant(), d.determinant()));
  CycMat2 sp = s.adjugate() * s;
  CHECK(sp == CycMat2::diagonal(s.determinant(), s.determinant()));

  Cyc lambda;
  CHECK(CycMat2::diagonal(z, z).is_scalar(&lambda));
  CHECK(lambda == z);
  CHECK(!d.is_scalar());
  CHECK(!s.is_scalar());
  CHECK(CycMat2::identity().is_scalar());
}

TEST_CASE("action on bidegree (4,4) monomials") {
  // b swaps x <-> y and z <-> w (an anti-diagonal pair), sending the corner
  // monomial x^4 z^4 to y^4 w^4 up to the determinant normalization.
  ProjModel d12 = model_d12();
  REQUIRE(d12.generators.size() >= 2);
  const ProjPair& b = d12.generators[1];

  BiPoly corner = monomial_44(4, 4);
  BiPoly image = act(b, corner);
  CHECK(!image.is_zero());

  // Identity acts trivially.
  ProjPair id{CycMat2::identity(), CycMat2::identity()};
  CHECK(act(id, corner) == corner);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) CHECK(act(id, monomial_44(i, j)) == monomial_44(i, j));

  auto mat = action_matrix(id);
  REQUIRE(mat.size() == 25);
  for (int r = 0; r < 25; ++r)
    for (int c = 0; c < 25; ++c)
      CHECK(mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
            (r == c ? Cyc::one() : Cyc()));

  // Substitution respects products of group elements: acting twice by b is
  // the same as acting by b^2.
  ProjPair b2{b.first * b.first, b.second * b.second};
  CHECK(act(b, act(b, corner)) == act(b2, corner));
}

TEST_CASE("rank and independence over the field") {
  Cyc z = Cyc::zeta_power(12, 1);
  std::vector<std::vector<Cyc>> rows = {
      {Cyc::one(), z},
      {z, z * z},                 // z times the first row
      {Cyc::one(), Cyc::one()},
  };
  CHECK(rank_cyc(rows) == 2);
  CHECK(rank_cyc({{Cyc(), Cyc()}}) == 0);

  BiPoly p = monomial_44(0, 0), q = monomial_44(1, 3);
  BiPoly sum = p + q;
  CHECK(independent({p, q}));
  CHECK(independent({p, q, sum}) == false);
}

TEST_CASE("model shapes and invariant dimensions") {
  ProjModel d12 = model_d12(), d8c2 = model_d8c2(), d8 = model_d8();
  CHECK(d12.conductor == 12);
  CHECK(d8c2.conductor == 8);
  CHECK(d8.conductor == 8);
  CHECK(all_proj_models().size() == 3);

  CHECK(d12.expected_basis.size() == 3);
  CHECK(d8c2.expected_basis.size() == 3);
  CHECK(d8.expected_basis.size() == 4);

  CHECK(invariant_dimension(d12.generators) == 3);
  CHECK(invariant_dimension(d8c2.generators) == 3);
  CHECK(invariant_dimension(d8.generators) == 4);

  for (const ProjModel& m : all_proj_models()) {
    CHECK(m.generator_names.size() == m.generators.size());
    CHECK(independent(m.expected_basis));
    for (const BiPoly& p : m.expected_basis) CHECK(is_invariant(m.generators, p));
    for (const ProjRelation& rel : m.relations) CHECK(relation_holds(m, rel));
  }

  // The corner monomial alone is not invariant under the order-12 model.
  CHECK(!is_invariant(d12.generators, monomial_44(4, 4)));
}

TEST_CASE("a wrong relation is rejected") {
  ProjModel d12 = model_d12();
  // a^5 = identity is false in the order-12 model (a has order 6 projectively).
  ProjRelation bad{"bad", {0, 0, 0, 0, 0}, {}};
  CHECK(!relation_holds(d12, bad));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/typek_data.hpp"

#include "typek/lattice.hpp"

using namespace typek;

TEST_CASE("record table shape and lookup") {
  const auto& recs = typek_records();
  REQUIRE(recs.size() == 8);
  CHECK(recs.front().group == "C2");
  CHECK(recs.back().group == "C2xD8");

  const TypeKRecord& d12 = typek_record("D12");
  CHECK(d12.group_order == 12);
  CHECK(d12.symplectic == "C6");
  CHECK(d12.h11 == 3);
  CHECK(d12.m_expr == "U(2)");
  CHECK(d12.disc_fixed == 1296);

  CHECK_THROWS_AS(typek_record("nope"), Error);
}

TEST_CASE("record lattices are consistent with the stored ranks") {
  for (const TypeKRecord& r : typek_records()) {
    Lattice m = m_lattice(r), n = n_lattice(r), fixed = fixed_lattice(r);
    CHECK(m.rank() + 1 == r.h11);
    CHECK(n.rank() == r.expected.rank_n);
    CHECK(n.rank() == m.rank() + 2);
    CHECK(iabs(disc(fixed)) == r.disc_fixed);
    CHECK(is_even(m));
    CHECK(is_even(n));
    CHECK(r.expected.m == r.expected.n - 1);
  }
}

TEST_CASE("eigenvalue rows") {
  const auto& rows = eigenvalue_rows();
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].symplectic == "C2");
  CHECK(rows[0].rank == 8);
  CHECK(rows[0].det == 256);
  const EigenvalueRow& c6 = rows.back();
  CHECK(c6.symplectic == "C6");
  CHECK(c6.rank == 16);
  CHECK(c6.det == 1296);
  CHECK(c6.eigenvalues.entries.size() == 3);
  CHECK(c6.eigenvalues.total_rank() == 16);
}

TEST_CASE("brauer rows recompute from the lattices") {
  const TypeKRecord& c2 = typek_record("C2");
  BrauerRow row = brauer_row(c2);
  CHECK(row == c2.expected);
  CHECK(row.summary() == "disc_fixed=1 disc_M=1024 disc_N=1024 a=10 rank_N=12 n=2 m=1");

  // Every row agrees with its stored counterpart (brauer_row throws otherwise).
  for (const TypeKRecord& r : typek_records()) CHECK(brauer_row(r) == r.expected);
}

TEST_CASE("rational duality per record") {
  CHECK(verify_duality(typek_record("D10")).equivalent);
  CHECK(verify_duality(typek_record("C2xC2xC2")).equivalent);
}

TEST_CASE("second Chern coefficient 24 over the group order") {
  CHECK(c2_coefficient(typek_record("C2")) == 12);
  CHECK(c2_coefficient(typek_record("D12")) == 2);
  CHECK(c2_coefficient(typek_record("C2xD8")) == make_rat(Int(3), Int(2)));
}

TEST_CASE("cubic form evaluations") {
  Lattice u = lattice_U();
  IVec x(2), y(2), z(2);
  x << 1, 0;
  y << 0, 1;
  z << 1, 1;
  // <y,z> = <x,z> = <x,y> = 1, so the value is a + b + c.
  CHECK(mu_cubic(u, x, 2, y, 3, z, 5) == 10);
  CHECK(mu_type_l(u, x, y, 7) == 7);

  Lattice u2 = rescale(u, 2);
  CHECK(mu_type_l(u2, x, y, 7) == 14);

  IVec bad(3);
  bad << 1, 0, 0;
  CHECK_THROWS_AS(mu_type_l(u, bad, y, 1), Error);
}

TEST_CASE("quotient-side half evaluation") {
  const TypeKRecord& c2 = typek_record("C2");
  IVec g1 = IVec::Zero(10), g2 = IVec::Zero(10);
  g1(0) = 1;
  g2(1) = 1;  // <g1, g2> = 2 in U(2)+E8(-2)
  CHECK(mu_x(c2, g1, g2, 5) == 5);
  CHECK(mu_x(c2, g1, g1, 3) == 0);
}

TEST_CASE("tube domain period on the rank-two row") {
  const TypeKRecord& d12 = typek_record("D12");
  QVec b = QVec::Zero(2), kappa(2);
  kappa << 1, 1;  // <kappa, kappa> = 4 in U(2)

  PeriodVector p = tube_domain_period(d12, b, kappa);
  REQUIRE(p.coords.size() == 4);
  CHECK(p.self_pairing.is_zero());
  CHECK(p.conj_pairing == GaussRat(Rat(8)));
  CHECK(p.coords[0] == GaussRat(Rat(1)));
  CHECK(p.coords[1] == GaussRat(Rat(2)));  // -(1/2)<i kappa, i kappa>
  CHECK(p.coords[2] == GaussRat(Rat(0), Rat(1)));
  CHECK(p.coords[3] == GaussRat(Rat(0), Rat(1)));

  QVec b2(2);
  b2 << 1, 0;
  PeriodVector q = tube_domain_period(d12, b2, kappa);
  CHECK(q.coords[1] == GaussRat(Rat(2), Rat(-2)));
  CHECK(q.conj_pairing == GaussRat(Rat(8)));

  QVec neg(2);
  neg << 1, -1;  // <neg, neg> = -4
  CHECK_THROWS_AS(tube_domain_period(d12, b, neg), Error);
  QVec wrong = QVec::Zero(3);
  CHECK_THROWS_AS(tube_domain_period(d12, wrong, wrong), Error);
}

TEST_CASE("rank-one mirror coordinate") {
  GaussRat tau = elliptic_mirror(make_rat(Int(1), Int(2)), Rat(3));
  CHECK(tau == GaussRat(make_rat(Int(1), Int(2)), Rat(3)));
  CHECK_THROWS_AS(elliptic_mirror(Rat(0), Rat(0)), Error);
  CHECK_THROWS_AS(elliptic_mirror(Rat(0), Rat(-1)), Error);
}

namespace {

// A syntactically valid table whose stored fixed-lattice discriminant
// contradicts the lattice expression.
const char* kBadDisc = R"json({
  "records": [
    { "group": "T", "group_order": 2, "symplectic": "C1",
      "m_lattice": "U(2)", "n_lattice": "2*U(2)",
      "fixed_lattice": "K3", "disc_fixed": 2, "h11": 3,
      "brauer": { "disc_m": 4, "disc_n": 16, "a": 1, "rank_n": 4, "n": 3, "m": 2 } }
  ],
  "eigenvalue_rows": []
})json";

const char* kBadRank = R"json({
  "records": [],
  "eigenvalue_rows": [
    { "symplectic": "C2", "rank": 7, "eigenvalues": [[2, 8]], "det": 256 }
  ]
})json";

}  // namespace

TEST_CASE("loading a self-contradictory table throws and leaves the table intact") {
  CHECK_THROWS_AS(load_typek_records(kBadDisc), VerificationError);
  CHECK_THROWS_AS(load_typek_records(kBadRank), VerificationError);
  CHECK_THROWS_AS(load_typek_records("not json"), std::exception);
  CHECK(typek_records().size() == 8);
  CHECK(typek_record("C2").h11 == 11);
  CHECK(eigenvalue_rows().size() == 5);
}

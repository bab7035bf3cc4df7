#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/exact_linalg.hpp"
#include "typek/numeric.hpp"

using namespace typek;

namespace {

IMat mat2(int a, int b, int c, int d) {
  IMat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(det_int(mat2(1, 2, 3, 4)) == -2);
  CHECK(det_int(IMat::Identity(5, 5)) == 1);
  IMat z = IMat::Zero(3, 3);
  CHECK(det_int(z) == 0);
  IMat a(3, 3);
  a << 2, -1, 0, -1, 2, -1, 0, -1, 2;  // A3 Cartan matrix
  CHECK(det_int(a) == 4);
  CHECK_THROWS_AS(det_int(IMat::Zero(2, 3)), Error);
}

TEST_CASE("rational rank") {
  CHECK(rank_int(mat2(1, 2, 2, 4)) == 1);
  CHECK(rank_int(mat2(1, 0, 0, 1)) == 2);
  CHECK(rank_int(IMat::Zero(3, 4)) == 0);
}

TEST_CASE("smith normal form of small fixtures") {
  {
    auto s = smith_normal_form(mat2(0, 2, 2, 0));
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 1) == 2);
    IMat prod = s.u * mat2(0, 2, 2, 0) * s.v;
    CHECK(exact_eq(prod, s.d));
  }
  {
    auto ds = elementary_divisors(mat2(2, 4, 6, 8));
    REQUIRE(ds.size() == 2);
    CHECK(ds[0] == 2);
    CHECK(ds[1] == 4);
  }
  {
    IMat d(2, 2);
    d << 4, 0, 0, 6;
    auto ds = elementary_divisors(d);
    REQUIRE(ds.size() == 2);
    CHECK(ds[0] == 2);
    CHECK(ds[1] == 12);
  }
  {
    auto s = smith_normal_form(IMat::Zero(2, 3));
    CHECK(s.divisors().empty());
    CHECK(iabs(det_int(s.u)) == 1);
    CHECK(iabs(det_int(s.v)) == 1);
  }
}

TEST_CASE("saturated kernel") {
  IMat a(1, 2);
  a << 2, 4;
  IMat k = saturated_kernel(a);
  REQUIRE(k.rows() == 1);
  // The kernel vector is primitive, not just a multiple landing in the kernel.
  CHECK(a(0, 0) * k(0, 0) + a(0, 1) * k(0, 1) == 0);
  CHECK(gcd(iabs(k(0, 0)), iabs(k(0, 1))) == 1);
  CHECK(saturated_kernel(IMat::Identity(3, 3)).rows() == 0);
}

TEST_CASE("row span basis preserves the span") {
  IMat a(3, 2);
  a << 1, 2, 2, 4, 0, 1;
  IMat b = row_span_basis(a);
  CHECK(b.rows() == 2);
  CHECK(rank_int(b) == 2);
}

TEST_CASE("congruent diagonalization") {
  QMat g(2, 2);
  g << 0, 1, 1, 0;
  auto cd = congruent_diagonalize(g);
  QMat check = cd.p * g * cd.p.transpose();
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      if (i != j) CHECK(check(i, j) == 0);
  CHECK(cd.diag(0) * cd.diag(1) < 0);  // one positive, one negative
  QMat bad(2, 3);
  bad.setZero();
  CHECK_THROWS_AS(congruent_diagonalize(bad), Error);
}

TEST_CASE("rational solve and inverse") {
  QMat a(2, 2);
  a << Rat(1), Rat(2), Rat(3), Rat(4);
  QVec b(2);
  b << Rat(5), Rat(6);
  auto x = solve_rational(a, b);
  REQUIRE(x.has_value());
  QVec r = a * (*x);
  CHECK(r(0) == 5);
  CHECK(r(1) == 6);

  QMat sing(2, 2);
  sing << Rat(1), Rat(2), Rat(2), Rat(4);
  QVec c(2);
  c << Rat(0), Rat(1);
  CHECK(!solve_rational(sing, c).has_value());

  QMat inv = inverse_rational(a);
  QMat prod = a * inv;
  CHECK(exact_eq(prod, QMat::Identity(2, 2)));
  CHECK_THROWS_AS(inverse_rational(sing), Error);
}

TEST_CASE("number theory helpers") {
  CHECK(squarefree_part(Int(720)) == 5);
  CHECK(squarefree_part(Int(-8)) == -2);
  CHECK(valuation(Int(48), Int(2)) == 4);
  CHECK(valuation(make_rat(Int(3), Int(8)), Int(2)) == -3);
  CHECK(mod2(make_rat(Int(-7), Int(4))) == make_rat(Int(1), Int(4)));
  CHECK(isqrt(Int(99)) == 9);
  Int root;
  CHECK(is_perfect_square(Int(144), &root));
  CHECK(root == 12);
  CHECK(!is_perfect_square(Int(2)));
  auto fs = factorize(Int(1296));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == 2);
  CHECK(fs[0].second == 4);
  CHECK(fs[1].first == 3);
  CHECK(fs[1].second == 4);
}

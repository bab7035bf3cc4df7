#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "typek/series.hpp"

using namespace typek;

namespace {

MultiSeries var1(int trunc) { return MultiSeries::variable(1, trunc, 0); }

Rat half() { return make_rat(Int(1), Int(2)); }

}  // namespace

TEST_CASE("multiseries construction and access") {
  MultiSeries z = var1(5);
  CHECK(z.nvars() == 1);
  CHECK(z.trunc() == 5);
  CHECK(z.valuation() == 1);
  CHECK(z.coeff({1}) == 1);
  CHECK(z.coeff({0}) == 0);
  CHECK_THROWS_AS(z.coeff({6}), Error);  // beyond the bound: never computed

  MultiSeries zero(2, 4);
  CHECK(zero.is_zero());
  CHECK(zero.valuation() == 5);

  CHECK(MultiSeries::constant(1, 3, Rat(7)).coeff({0}) == 7);
  CHECK(MultiSeries::monomial(2, 6, {1, 2}, Rat(-3)).coeff({1, 2}) == -3);
}

TEST_CASE("truncation bookkeeping: min rule and valuation-aware products") {
  MultiSeries a = var1(5), b = var1(3);
  CHECK((a + b).trunc() == 3);
  CHECK((a - b).trunc() == 3);

  // Multiplying by a series of valuation v extends reach: min(Ta+vb, Tb+va).
  MultiSeries z = var1(5);
  CHECK((z * z).trunc() == 6);
  MultiSeries one = MultiSeries::constant(1, 5, Rat(1));
  CHECK((one * z).trunc() == 5);

  CHECK(z.truncated(2).trunc() == 2);
  CHECK_THROWS_AS(z.truncated(7), Error);  // cannot invent precision
}

TEST_CASE("arithmetic fixtures") {
  MultiSeries z = var1(8);
  MultiSeries one = MultiSeries::constant(1, 8, Rat(1));
  MultiSeries p = one + z;

  MultiSeries cube = p.pow(3);
  CHECK(cube.coeff({0}) == 1);
  CHECK(cube.coeff({1}) == 3);
  CHECK(cube.coeff({2}) == 3);
  CHECK(cube.coeff({3}) == 1);
  CHECK(cube.coeff({4}) == 0);
  CHECK(p.pow(0) == one);

  MultiSeries inv = p.inverse();
  CHECK(inv.coeff({5}) == -1);
  CHECK(p * inv == one);
  CHECK_THROWS_AS(z.inverse(), Error);

  CHECK(p.to_string({"z"}) == "1 + z");
  CHECK((cube - one).to_string({"z"}) == "3*z + 3*z^2 + z^3");
}

TEST_CASE("derivative, Euler operator, monomial division, swap") {
  MultiSeries m = MultiSeries::monomial(2, 6, {2, 1}, Rat(1));
  CHECK(m.derivative(0) == MultiSeries::monomial(2, 5, {1, 1}, Rat(2)));
  CHECK(m.theta(0) == MultiSeries::monomial(2, 6, {2, 1}, Rat(2)));
  CHECK(m.theta(1) == m);

  MultiSeries sum = m + MultiSeries::monomial(2, 6, {3, 0}, Rat(1));
  MultiSeries q = sum.divide_monomial({2, 0});
  CHECK(q.coeff({0, 1}) == 1);
  CHECK(q.coeff({1, 0}) == 1);
  CHECK_THROWS_AS(sum.divide_monomial({0, 1}), Error);

  CHECK(m.swap_vars(0, 1) == MultiSeries::monomial(2, 6, {1, 2}, Rat(1)));
}

TEST_CASE("substitution") {
  MultiSeries z = var1(4);
  MultiSeries one = MultiSeries::constant(1, 4, Rat(1));
  MultiSeries f = one + z + z * z.truncated(3);  // 1 + z + z^2 at trunc 4
  MultiSeries g = z + z * z.truncated(3);        // z + z^2

  MultiSeries got = f.substitute({g});
  CHECK(got.coeff({0}) == 1);
  CHECK(got.coeff({1}) == 1);
  CHECK(got.coeff({2}) == 2);
  CHECK(got.coeff({3}) == 2);
  CHECK(got.coeff({4}) == 1);

  CHECK_THROWS_AS(f.substitute({one + z}), Error);  // needs positive valuation
  CHECK_THROWS_AS(f.substitute({g, g}), Error);     // one series per variable
  CHECK(f.substitute({var1(3)}).trunc() == 3);      // result keeps the weakest bound
}

TEST_CASE("exp, log, sqrt") {
  MultiSeries f = MultiSeries::variable(2, 6, 0) + Rat(2) * MultiSeries::variable(2, 6, 1);
  CHECK(log_series(exp_series(f)) == f);
  CHECK(exp_series(MultiSeries(2, 6) /*zero*/).coeff({0, 0}) == 1);

  MultiSeries z = var1(8);
  MultiSeries p = MultiSeries::constant(1, 8, Rat(1)) + z;
  CHECK(sqrt_series(p * p) == p);

  MultiSeries fourp = Rat(4) * p;
  MultiSeries r = sqrt_series(fourp);
  CHECK(r.coeff({0}) == 2);
  CHECK(r * r == fourp);

  CHECK_THROWS_AS(sqrt_series(MultiSeries::constant(1, 4, Rat(2))), Error);
  CHECK_THROWS_AS(exp_series(p), Error);   // nonzero constant term
  CHECK_THROWS_AS(log_series(z), Error);   // constant term must be 1
}

TEST_CASE("map reversion") {
  // q = z(1 + z): the inverse has signed Catalan coefficients.
  MultiSeries z = var1(6);
  MultiSeries unit = MultiSeries::constant(1, 6, Rat(1)) + z;
  std::vector<MultiSeries> back = revert_map({unit});
  REQUIRE(back.size() == 1);
  CHECK(back[0].coeff({1}) == 1);
  CHECK(back[0].coeff({2}) == -1);
  CHECK(back[0].coeff({3}) == 2);
  CHECK(back[0].coeff({4}) == -5);
  CHECK(back[0].coeff({5}) == 14);
  CHECK(back[0].coeff({6}) == -42);
}

TEST_CASE("puiseux arithmetic and exponent grid") {
  PuiseuxSeries u = theta3(Rat(4));
  PuiseuxSeries one = PuiseuxSeries::monomial(Rat(0), Rat(1), Rat(4));
  CHECK(u * u.inverse() == one);

  PuiseuxSeries t = theta3(Rat(2));
  CHECK(t.exp_den() == 2);
  CHECK(t.valuation() == 0);
  CHECK(t.coeff(Rat(0)) == 1);
  CHECK(t.coeff(half()) == 2);
  CHECK(t.coeff(Rat(1)) == 0);
  CHECK(t.coeff(Rat(2)) == 2);
  CHECK(t.to_string() == "1 + 2*q^(1/2) + 2*q^2");

  PuiseuxSeries shifted = t.shift(half());
  CHECK(shifted.coeff(half()) == 1);
  CHECK(shifted.coeff(Rat(1)) == 2);

  PuiseuxSeries doubled = t.scale_exponent(Rat(2));
  CHECK(doubled.exp_den() == 1);
  MultiSeries zq = doubled.to_integer_series();
  CHECK(zq.coeff({0}) == 1);
  CHECK(zq.coeff({1}) == 2);
  CHECK(zq.coeff({4}) == 2);
  CHECK_THROWS_AS(t.to_integer_series(), Error);  // fractional exponents

  PuiseuxSeries cancel = t - t;
  CHECK(cancel.is_zero());
  CHECK(cancel.valuation() == Rat(3));  // trunc + 1
}

TEST_CASE("theta constants") {
  PuiseuxSeries t2 = theta2(Rat(2));
  CHECK(t2.coeff(make_rat(Int(1), Int(8))) == 2);
  CHECK(t2.coeff(make_rat(Int(9), Int(8))) == 2);
  CHECK(t2.entries().size() == 2);

  PuiseuxSeries t4 = theta4(Rat(5));
  CHECK(t4.coeff(Rat(0)) == 1);
  CHECK(t4.coeff(half()) == -2);
  CHECK(t4.coeff(Rat(2)) == 2);
  CHECK(t4.coeff(make_rat(Int(9), Int(2))) == -2);

  PuiseuxSeries t3 = theta3(make_rat(Int(9), Int(2)));
  CHECK(t3.coeff(make_rat(Int(9), Int(2))) == 2);
}

TEST_CASE("jacobi identity theta2^4 + theta4^4 = theta3^4") {
  Rat t(6);
  PuiseuxSeries lhs = theta2(t).pow(4) + theta4(t).pow(4);
  PuiseuxSeries rhs = theta3(t).pow(4);
  CHECK(lhs == rhs);
}

TEST_CASE("dedekind eta and rescaling") {
  PuiseuxSeries e = eta(Rat(13));
  auto q24 = [](int k) { return make_rat(Int(k), Int(24)); };
  CHECK(e.coeff(q24(1)) == 1);
  CHECK(e.coeff(q24(25)) == -1);
  CHECK(e.coeff(q24(49)) == -1);
  CHECK(e.coeff(q24(121)) == 1);
  CHECK(e.coeff(q24(169)) == 1);
  CHECK(e.coeff(q24(289)) == -1);
  CHECK(e.coeff(q24(73)) == 0);  // 73 = 1 + 3*24: no pentagonal hit

  PuiseuxSeries e2 = eta_scaled(2, Rat(6));
  auto ent = e2.entries();
  REQUIRE(!ent.empty());
  CHECK(ent.front().first == make_rat(Int(1), Int(48)));
  CHECK(ent.front().second == 1);
  CHECK(e2.coeff(make_rat(Int(25), Int(48))) == -1);

  CHECK(eta_scaled(1, Rat(6)) == eta(Rat(6)));
  CHECK_THROWS_AS(eta_scaled(0, Rat(6)), Error);
}

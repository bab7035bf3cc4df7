// Truncated power series with exact rational coefficients.
//
// MultiSeries: multivariate, truncated by total degree.  Every operation
// tracks the truncation bound of its result (min-rule, valuation-aware for
// products), so a coefficient you can read is a coefficient that is correct.
//
// PuiseuxSeries: univariate with rational exponents on a grid k / den.
// Used for the classical theta constants and the Dedekind eta function,
// whose natural exponent grids are 1/8, 1/2 and 1/24.
#pragma once

#include "typek/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace typek {

class MultiSeries {
 public:
  using Exponent = std::vector<int>;

  MultiSeries() = default;
  MultiSeries(int nvars, int trunc);
  static MultiSeries constant(int nvars, int trunc, const Rat& c);
  static MultiSeries variable(int nvars, int trunc, int i);
  static MultiSeries monomial(int nvars, int trunc, Exponent e, const Rat& c);

  int nvars() const { return nvars_; }
  int trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }

  // Total degree of the lowest term; trunc() + 1 for the zero series.
  int valuation() const;

  // Coefficient of z^e; zero if absent, error if the exponent lies beyond
  // the truncation bound (that coefficient was never computed).
  Rat coeff(const Exponent& e) const;
  void set_coeff(const Exponent& e, const Rat& c);

  MultiSeries truncated(int t) const;

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a);
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const Rat& c, const MultiSeries& a);
  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

  MultiSeries pow(unsigned e) const;
  MultiSeries inverse() const;  // constant term must be nonzero

  MultiSeries derivative(int i) const;
  MultiSeries theta(int i) const;  // z_i d/dz_i, the Euler operator

  // Substitute args[i] for variable i; every argument must have positive
  // valuation and the arguments must share nvars and trunc.
  MultiSeries substitute(const std::vector<MultiSeries>& args) const;

  // Divide by the monomial z^e; every term must be divisible.
  MultiSeries divide_monomial(const Exponent& e) const;

  // Exchange two variables (used for symmetry checks).
  MultiSeries swap_vars(int i, int j) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  int trunc_ = -1;
  std::map<Exponent, Rat> terms_;  // zero coefficients never stored

  void check_compatible(const MultiSeries& other) const;
};

// exp(f) for f with zero constant term.
MultiSeries exp_series(const MultiSeries& f);
// log(f) for f with constant term 1.
MultiSeries log_series(const MultiSeries& f);
// sqrt(f) branch with sqrt(f)(0) = +sqrt(f(0)); f(0) must be a rational square.
MultiSeries sqrt_series(const MultiSeries& f);

// Invert the map q_i = z_i * units[i](z) (units have constant term 1),
// returning z_i(q).  Fixed-point iteration, at most `trunc` rounds; the exact
// round-trip q_i = z_i(q) * units[i](z(q)) is verified before returning.
std::vector<MultiSeries> revert_map(const std::vector<MultiSeries>& units);

// ---------------------------------------------------------------------------

class PuiseuxSeries {
 public:
  explicit PuiseuxSeries(Rat trunc);  // zero series
  static PuiseuxSeries monomial(const Rat& exponent, const Rat& c, const Rat& trunc);

  const Rat& trunc() const { return trunc_; }
  const Int& exp_den() const { return den_; }
  bool is_zero() const { return terms_.empty(); }
  // All (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<Rat, Rat>> entries() const;

  Rat coeff(const Rat& exponent) const;
  void add_term(const Rat& exponent, const Rat& c);
  Rat valuation() const;  // trunc() + 1 for the zero series

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const Rat& c, const PuiseuxSeries& a);
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  PuiseuxSeries pow(unsigned e) const;
  PuiseuxSeries inverse() const;        // nonzero series
  PuiseuxSeries shift(const Rat& e) const;           // multiply by q^e
  PuiseuxSeries scale_exponent(const Rat& f) const;  // q^e -> q^(e*f), f > 0
  PuiseuxSeries truncated(const Rat& t) const;

  // The series as a univariate MultiSeries; requires all exponents integral
  // and >= 0.
  MultiSeries to_integer_series() const;

  std::string to_string(const std::string& name = "q") const;

 private:
  Int den_ = 1;          // exponent grid: keys are k <-> exponent k/den_
  Rat trunc_ = -1;       // coefficients valid for exponents <= trunc_
  std::map<Int, Rat> terms_;

  void normalize();  // minimal den_
  static void align(PuiseuxSeries& a, PuiseuxSeries& b);
};

// Classical theta constants as series in q on the natural exponent grids:
//   theta2 = sum q^((n + 1/2)^2 / 2)   (grid 1/8)
//   theta3 = sum q^(n^2 / 2)           (grid 1/2)
//   theta4 = sum (-1)^n q^(n^2 / 2)    (grid 1/2)
PuiseuxSeries theta2(const Rat& trunc);
PuiseuxSeries theta3(const Rat& trunc);
PuiseuxSeries theta4(const Rat& trunc);

// Dedekind eta: q^(1/24) * prod_{n >= 1} (1 - q^n)  (grid 1/24).
PuiseuxSeries eta(const Rat& trunc);
// eta at the rescaled variable t / k, i.e. exponents divided by k.
PuiseuxSeries eta_scaled(int k, const Rat& trunc);

}  // namespace typek

// Regular-singular differential operators in Euler form
//   L = sum_alpha z^alpha * P_alpha(T_1, ..., T_v),   T_i = z_i d/dz_i,
// their action on truncated series (including a single log factor), a
// degree-by-degree Frobenius solver over Q, mirror maps via exact series
// reversion, and the three operator families studied by the verification
// suites (a two-variable system, its one-variable degeneration, and a
// three-variable system spanned by six quadratic operators).
#pragma once

#include "typek/series.hpp"

#include <string>
#include <vector>

namespace typek {

// Polynomial in the Euler operators T_1..T_v with rational coefficients.
struct ThetaPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;  // exponent vector in T -> coefficient

  static ThetaPoly constant(int nvars, const Rat& c);
  static ThetaPoly theta(int nvars, int i);  // the single operator T_i

  Rat evaluate(const std::vector<Int>& m) const;  // P(m)
  ThetaPoly dtheta(int j) const;                  // formal d/dT_j

  friend ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b);
  friend ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b);
  friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
  friend ThetaPoly operator*(const Rat& c, const ThetaPoly& a);
};

struct ThetaOperator {
  int nvars = 0;
  std::vector<std::pair<std::vector<int>, ThetaPoly>> terms;  // (z-exponent, poly)

  ThetaOperator() = default;
  explicit ThetaOperator(int nv) : nvars(nv) {}
  void add_term(std::vector<int> z_exponent, ThetaPoly poly);
  int min_shift() const;  // smallest |z-exponent| over the terms

  friend ThetaOperator operator+(const ThetaOperator& a, const ThetaOperator& b);
  friend ThetaOperator operator*(const Rat& c, const ThetaOperator& a);
};

// L(f) for a plain series.
MultiSeries apply(const ThetaOperator& op, const MultiSeries& f);

// The extra regular part generated when L acts on f * log z_j:
//   L(f log z_j) = L(f) log z_j + (dL/dT_j)(f).
MultiSeries apply_dtheta(const ThetaOperator& op, int j, const MultiSeries& f);

// Raised when the degree-by-degree solve fails.
struct SolveError : Error {
  enum class Kind { Inconsistent, Underdetermined };
  Kind kind;
  int degree;
  std::string monomial;  // offending monomial (free unknown / bad equation)
  SolveError(Kind k, int deg, std::string mono, const std::string& msg)
      : Error(msg), kind(k), degree(deg), monomial(std::move(mono)) {}
};

// The unique series solution with f(0) = 1 annihilated by every operator,
// computed through total degree `trunc`.  Order-by-order linear algebra over
// Q; inconsistent or underdetermined orders raise SolveError.
MultiSeries solve_regular(const std::vector<ThetaOperator>& ops, int trunc);

// The regular companion R_j (vanishing constant term) of the log solution
// phi0 * log z_j + R_j annihilated by every operator.
MultiSeries solve_log(const std::vector<ThetaOperator>& ops, const MultiSeries& phi0, int j);

// Mirror maps q_i = z_i exp(R_i / phi0) and their exact inverses.
struct MirrorMaps {
  std::vector<MultiSeries> q_units;  // U_i with q_i = z_i * U_i(z)
  std::vector<MultiSeries> q_of_z;   // q_i as a series in z
  std::vector<MultiSeries> z_of_q;   // inverse series
};
MirrorMaps mirror_maps(const MultiSeries& phi0, const std::vector<MultiSeries>& logs);

// ---------------------------------------------------------------------------
// Operator families.

// Two-variable system: T_i^2 - 4 z_i (4T_1 + 4T_2 + 3)(4T_1 + 4T_2 + 1).
std::vector<ThetaOperator> d12_operators();

// One-variable operator (8z - 1)(z + 1) T^2 + z (16z + 7) T + 2z (4z + 1).
ThetaOperator elliptic_operator();

// The six quadratic operators spanning the three-variable system.
std::vector<ThetaOperator> d8_basis_operators();

// Everything the two-variable verification needs, computed at one truncation.
struct D12Model {
  int trunc = 0;
  MultiSeries phi0, r1, r2;
  MirrorMaps maps;
  // Yukawa couplings in the mirror coordinates (unnormalized).
  MultiSeries k11, k12, k22;
};
D12Model compute_d12(int trunc);

// Closed forms on the mirror side: z_i(q_1, q_2) from theta constants, and
// phi0 composed with the inverse mirror map as sqrt(F(q1)/2 * F(q2)/2) with
// F = theta3^4 + theta4^4.
MultiSeries d12_theta_z_of_q(int which, int trunc);  // which in {0, 1}
MultiSeries d12_theta_phi0_of_q(int trunc);

// Closed forms on the one-variable mirror side, truncated at exponent
// `target` on the q^(1/6) grid: the mirror coordinate
//   z(q) = (eta(t)^3 eta(t/6) / (eta(t/2)^3 eta(t/3)))^3
// and the period eta(t/2)^6 eta(t/3) / (eta(t)^3 eta(t/6)^2).
PuiseuxSeries elliptic_eta_z_of_q(const Rat& target);
PuiseuxSeries elliptic_eta_phi0_of_q(const Rat& target);

// Univariate composition f(g(q)) of an integer-exponent series with a
// Puiseux series of positive valuation, correct to `target` (which must be
// within what f and g can support).
PuiseuxSeries compose(const MultiSeries& f, const PuiseuxSeries& g, const Rat& target);

}  // namespace typek

// Exact arithmetic in the cyclotomic fields Q(zeta_8) and Q(zeta_12), the
// projective group actions on P^1 x P^1 built from them, and the induced
// action on polynomials of bidegree (4, 4).  Everything needed to verify
// that the expected branching pencils are exactly the invariant spaces of
// the stated group actions.
#pragma once

#include "typek/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace typek {

// Element of Q(zeta_N) for N in {8, 12} (both have degree 4 over Q), written
// in the power basis 1, zeta, zeta^2, zeta^3 modulo the N-th cyclotomic
// polynomial (zeta^4 + 1 for N = 8, zeta^4 - zeta^2 + 1 for N = 12).
// Conductor 0 marks a plain rational; mixed arithmetic promotes it.
class Cyc {
 public:
  Cyc() = default;  // rational zero
  explicit Cyc(const Rat& c) { c_[0] = c; }
  static Cyc rational(const Rat& c) { return Cyc(c); }
  static Cyc zero(int conductor);
  static Cyc one() { return Cyc(Rat(1)); }
  // zeta_N^k for any integer k (reduced modulo N).
  static Cyc zeta_power(int conductor, long k);

  int conductor() const { return n_; }
  const std::array<Rat, 4>& coeffs() const { return c_; }
  bool is_zero() const;
  // True when the element lies in Q; the value is stored through `out`.
  bool is_rational(Rat* out = nullptr) const;

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc inverse() const;  // error on zero

  std::string to_string() const;

 private:
  int n_ = 0;              // conductor; 0 when the element is a plain rational
  std::array<Rat, 4> c_{};  // coefficients of 1, zeta, zeta^2, zeta^3

  static void promote(Cyc& a, Cyc& b);
  void strip();  // drop the conductor when only c_[0] survives
};

// 2 x 2 matrix over a cyclotomic field.
struct CycMat2 {
  std::array<std::array<Cyc, 2>, 2> m{};

  static CycMat2 identity();
  static CycMat2 diagonal(const Cyc& a, const Cyc& d);
  static CycMat2 anti_diagonal(const Cyc& b, const Cyc& c);

  friend CycMat2 operator*(const CycMat2& a, const CycMat2& b);
  friend bool operator==(const CycMat2& a, const CycMat2& b);

  CycMat2 adjugate() const;
  Cyc determinant() const;
  // True when the matrix is lambda * identity for a nonzero scalar lambda.
  bool is_scalar(Cyc* lambda = nullptr) const;
};

// A group element acting on P^1 x P^1 through one matrix per factor.
struct ProjPair {
  CycMat2 first;   // acts on the coordinates (x : y)
  CycMat2 second;  // acts on the coordinates (z : w)
};

// Polynomial of bidegree (4, 4) in x, y and z, w; the coefficient of
// x^i y^(4-i) z^j w^(4-j) sits at index 5*i + j.
struct BiPoly {
  std::array<Cyc, 25> coeff{};

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Cyc& c, const BiPoly& p);
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  bool is_zero() const;
  std::string to_string() const;
};

// The monomial x^i y^(4-i) z^j w^(4-j).
BiPoly monomial_44(int i, int j);

// Substitution action (g . p)(v) = p(adj(g) v).  The adjugate differs from
// the inverse by det(g), so on bidegree (4, 4) this is the classical pullback
// rescaled by det^4 per factor -- the same element of the projective action.
BiPoly act(const ProjPair& g, const BiPoly& p);

// 25 x 25 matrix of p -> act(g, p) on the monomial basis; entry [r][c] is the
// coefficient of monomial r in the image of monomial c.
std::vector<std::vector<Cyc>> action_matrix(const ProjPair& g);

// Row rank over the field by Gaussian elimination (destructive on the copy).
int rank_cyc(std::vector<std::vector<Cyc>> rows);

// Dimension of the joint fixed space
//   { p : act(g, p) = p for every generator g }.
int invariant_dimension(const std::vector<ProjPair>& generators);

// Whether act(g, p) = p for every generator.
bool is_invariant(const std::vector<ProjPair>& generators, const BiPoly& p);

// Whether the polynomials are linearly independent over the field.
bool independent(const std::vector<BiPoly>& polys);

// A relation "product over lhs = product over rhs up to scalar in each
// factor"; the empty word is the identity.
struct ProjRelation {
  std::string name;
  std::vector<int> lhs, rhs;  // generator indices
};

// A group acting on P^1 x P^1 together with its expected invariant pencil.
struct ProjModel {
  std::string name;
  int conductor = 0;
  std::vector<std::string> generator_names;
  std::vector<ProjPair> generators;
  std::vector<ProjRelation> relations;
  std::vector<BiPoly> expected_basis;
};

// Whether the relation holds in PGL(2) x PGL(2), i.e. the two products agree
// up to a nonzero scalar in each factor separately.
bool relation_holds(const ProjModel& model, const ProjRelation& relation);

// The three model actions: the order-12 dihedral model, the order-16 model
// with a central factor, and the order-8 dihedral model whose pencil has
// dimension 4.
ProjModel model_d12();
ProjModel model_d8c2();
ProjModel model_d8();
std::vector<ProjModel> all_proj_models();

}  // namespace typek

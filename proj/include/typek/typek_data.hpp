// The fixture table for the eight group rows handled by this project: the
// rank-(h11 - 1) lattice M attached to the quotient and the rank-(25 - h11)
// lattice N attached to its transcendental side, the fixed lattice of the
// symplectic subgroup, and the expected discriminant/rank bookkeeping.
// Derived quantities (duality over Q, the 2-torsion count m, cubic-form and
// second-Chern evaluations, tube-domain periods) are computed from the table.
#pragma once

#include "typek/group_action.hpp"
#include "typek/lattice.hpp"
#include "typek/quad_space.hpp"

#include <string>
#include <vector>

namespace typek {

// Expected row of the discriminant bookkeeping table:
//   |disc M| * |disc N| / |disc fixed| = 2^(2a),  n = rank N - a,  m = n - 1.
struct BrauerRow {
  Int disc_fixed = 1, disc_m = 1, disc_n = 1;
  int a = 0, rank_n = 0, n = 0, m = 0;
  friend bool operator==(const BrauerRow&, const BrauerRow&) = default;
  std::string summary() const;
};

struct TypeKRecord {
  std::string group;       // e.g. "D12"
  int group_order = 0;     // |G|
  std::string symplectic;  // the symplectic subgroup, e.g. "C6"
  std::string m_expr, n_expr, fixed_expr;
  Int disc_fixed = 1;      // stored |disc| of the fixed lattice
  int h11 = 0;
  BrauerRow expected;
};

// Eigenvalue bookkeeping for the symplectic subgroups: (d, mult) entries give
// the multiplicity of each primitive d-th root of unity, the total rank of
// the moving part, and the expected coinvariant determinant.
struct EigenvalueRow {
  std::string symplectic;
  int rank = 0;
  EigenvalueMultiset eigenvalues;
  Int det = 1;
};

// The embedded table (validated on first use: stored discriminants and ranks
// are recomputed from the lattice expressions; mismatch throws).  An explicit
// JSON text can be supplied to replace the embedded one.
const std::vector<TypeKRecord>& typek_records();
const std::vector<EigenvalueRow>& eigenvalue_rows();
void load_typek_records(const std::string& json_text);  // replaces the table

const TypeKRecord& typek_record(const std::string& group);

Lattice m_lattice(const TypeKRecord& r);
Lattice n_lattice(const TypeKRecord& r);
Lattice fixed_lattice(const TypeKRecord& r);

// Rational equivalence U + M ~ N for the row.
QEquivalence verify_duality(const TypeKRecord& r);

// Recompute the bookkeeping row from the lattices; throws VerificationError
// if the ratio is not a power of 4 or n is negative.
BrauerRow brauer_row(const TypeKRecord& r);

// Second-Chern-class evaluation coefficient 24 / |G|.
Rat c2_coefficient(const TypeKRecord& r);

// Cubic form on M + Z: mu(x + a e, y + b e, z + c e) =
// a <y,z> + b <x,z> + c <x,y>; the special evaluation used most often is
// mu(alpha, beta, n e) = n <alpha, beta>.
Int mu_cubic(const Lattice& m, const IVec& x, const Int& a, const IVec& y, const Int& b,
             const IVec& z, const Int& c);
Int mu_type_l(const Lattice& m, const IVec& alpha, const IVec& beta, const Int& n);

// Quotient-side evaluation (n/2) <gamma1, gamma2>; integral whenever the
// halved form is integral on M (true for every table row, where all Gram
// entries are even).
Rat mu_x(const TypeKRecord& r, const IVec& gamma1, const IVec& gamma2, const Int& n);

// Period of the tube-domain point B + i*kappa inside (U + M) tensor C:
// omega = e - (1/2) <B + i kappa, B + i kappa> f + (B + i kappa), expressed
// in the basis (e, f, basis of M).  Requires <kappa, kappa> > 0; the
// constructor verifies <omega, omega> = 0 and <omega, conj omega> =
// 2 <kappa, kappa> exactly.
struct PeriodVector {
  std::vector<GaussRat> coords;
  GaussRat self_pairing;      // <omega, omega>, always 0
  GaussRat conj_pairing;      // <omega, conj omega> = 2 <kappa, kappa>
};
PeriodVector tube_domain_period(const TypeKRecord& r, const QVec& b, const QVec& kappa);

// Rank-one case: the tube-domain coordinate is the point tau = B + i*kappa in
// the upper half plane (kappa > 0).
GaussRat elliptic_mirror(const Rat& b, const Rat& kappa);

}  // namespace typek

// Finite group actions on lattices by Gram-preserving integer matrices:
// invariant and coinvariant sublattices, glue exponents of involutions on
// unimodular lattices, torsion of anti-invariant quotients, and determinants
// of coinvariant lattices predicted from eigenvalue data.
#pragma once

#include "typek/lattice.hpp"

#include <vector>

namespace typek {

// A finite subgroup of O(L) given by generators; the constructor checks each
// generator preserves the Gram matrix and that the generated group is finite
// (closure bounded by 10^4 elements).
class LatticeAction {
 public:
  LatticeAction(Lattice lattice, std::vector<IMat> generators);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<IMat>& generators() const { return generators_; }
  const std::vector<IMat>& elements() const { return elements_; }  // whole group
  std::size_t order() const { return elements_.size(); }

 private:
  Lattice lattice_;
  std::vector<IMat> generators_;
  std::vector<IMat> elements_;
};

// Fixed sublattice L^G = {x : g x = x for all g}; saturated by construction.
Sublattice invariant_sublattice(const LatticeAction& action);

// Coinvariant sublattice L_G = (L^G)^perp in L.
Sublattice coinvariant_sublattice(const LatticeAction& action);

// The standard involution on U^3 + E8(-1)^2 acting by -1 on the first U,
// swapping the second and third U, and swapping the two E8(-1) summands.
LatticeAction enriques_model();

// For an involution i on a unimodular lattice: L / (L^i + L_i) is 2-elementary
// of order 2^a; returns a.  Errors if the ambient lattice is not unimodular or
// the glue group is not 2-elementary.
int glue_exponent(const LatticeAction& action, const IMat& involution);

// For a non-trivial involution i on the lattice `l`: the torsion part of
// coker(1 - i) on coordinates.  Must be 2-elementary; returns its rank n.
int anti_invariant_torsion(const Lattice& l, const IMat& involution);

// Same, for an involution inside a unimodular ambient action: additionally
// cross-checks n == rank(coinvariant) - glue_exponent and throws
// VerificationError on mismatch.
int anti_invariant_torsion(const LatticeAction& action, const IMat& involution);

// Eigenvalue data of a finite-order isometry: entries (d, m) mean the
// primitive d-th roots of unity each occur with multiplicity m.
struct EigenvalueMultiset {
  std::vector<std::pair<int, int>> entries;
  int total_rank() const;  // sum of m * phi(d)
};

// Determinant (up to sign) of the coinvariant lattice predicted by the
// eigenvalue data: product over entries of Phi_d(1)^m.  Entries with d = 1
// are rejected (the fixed part is not coinvariant).
Int coinv_det(const EigenvalueMultiset& ev);

// Phi_d(1): p when d is a power of the prime p, else 1 (for d >= 2).
Int cyclotomic_value_at_one(int d);

int euler_phi(int d);

}  // namespace typek

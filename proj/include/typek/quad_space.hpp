// Rational quadratic spaces: Hilbert symbols, Hasse invariants, and the
// complete invariant test (rank, signature, discriminant square class, Hasse
// invariants at the finitely many bad primes) for equivalence over Q.
#pragma once

#include "typek/lattice.hpp"

#include <map>
#include <vector>

namespace typek {

// Hilbert symbol (a, b)_p at a finite prime p; a, b nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Int& p);

// Hilbert symbol at the real place.
int hilbert_symbol_real(const Rat& a, const Rat& b);

// Hasse invariant of the diagonal form <a_1, ..., a_n> at p:
// product over i < j of (a_i, a_j)_p.
int hasse_invariant(const std::vector<Rat>& diag, const Int& p);
int hasse_invariant_real(const std::vector<Rat>& diag);

// Invariants determining a nondegenerate quadratic space over Q.
struct QSpaceInvariants {
  Eigen::Index rank = 0;
  Signature sig;
  Int disc_class = 1;           // squarefree representative of disc mod squares
  std::vector<Int> diag;        // a squarefree diagonalization
  std::map<Int, int> hasse;     // prime -> Hasse invariant
  std::string summary() const;
};

// Diagonalize and reduce; Hasse invariants are recorded at every prime in
// `primes` (the caller chooses the relevant finite set).
QSpaceInvariants qspace_invariants(const Lattice& l, const std::vector<Int>& primes);

struct QEquivalence {
  bool equivalent = false;
  std::vector<Int> primes;  // the bad prime set used for the comparison
  QSpaceInvariants lhs, rhs;
};

// Decide whether the two lattices span equivalent quadratic spaces over Q.
QEquivalence q_equivalent(const Lattice& a, const Lattice& b);

}  // namespace typek

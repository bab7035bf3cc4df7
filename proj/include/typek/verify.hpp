// The verification suites: each driver re-derives one block of claims from
// first principles and reports per-check pass/fail results.  All computation
// is exact; a suite never prints, it only fills a Report.
#pragma once

#include "typek/report.hpp"

#include <cstdint>
#include <vector>

namespace typek {

// Rational equivalence U + M ~ N for every table row, plus the integral
// coincidence in the rank-10 row.
Report verify_duality();

// The discriminant bookkeeping table: recomputed (|disc M|, |disc N|, a,
// rank N, n, m) rows and the two-torsion sequence across rows.
Report verify_brauer();

// Coinvariant determinants predicted by eigenvalue data, cross-checked
// against the stored fixed-lattice discriminants.
Report verify_coinv_det();

// The rank-10 involution model: invariant/coinvariant lattices, their
// discriminant forms, the glue exponent, and the anti-invariant torsion.
Report verify_enriques();

// Two-variable family: Frobenius solution, log companions, mirror maps,
// theta-quotient closed forms, and the Yukawa couplings, all through total
// degree `degree`.
Report verify_pf_d12(int degree = 8);

// One-variable family: Frobenius solution against the central binomial-cube
// sums, eta-quotient mirror map, composition identity, and the lattice-sum
// identity, through `steps` steps on the q^(1/6) grid.
Report verify_pf_elliptic(int steps = 20);

// Three-variable family: unique joint Frobenius solution, permutation
// symmetry, and annihilation by `trials` random combinations of the six
// basis operators, through total degree `trunc`.
Report verify_pf_d8(int trunc = 6, int trials = 20, std::uint64_t seed = 20260823);

// Projective actions on P^1 x P^1: group relations, invariance and span
// stability of the expected pencils, and exact invariant dimensions.
Report verify_proj_models();

// Structural property suites: Smith normal form contract, Hilbert
// reciprocity, overlattice order law, the Jacobi theta identity, and series
// reversion round-trips.
Report verify_properties(int matrix_trials = 200, int hilbert_trials = 200,
                         std::uint64_t seed = 20260823);

// The eight table/family suites above (not verify_properties), in a fixed
// order; `jobs` > 1 runs independent suites on that many threads.  The
// returned order is deterministic and independent of `jobs`.
std::vector<Report> verify_all(int jobs = 1);

}  // namespace typek

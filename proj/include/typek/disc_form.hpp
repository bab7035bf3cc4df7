// Discriminant groups A(L) = L^vee / L of nondegenerate even lattices, the
// Q/2Z-valued quadratic form on them, comparison fingerprints, and even
// overlattices glued along isotropic subgroups.
#pragma once

#include "typek/lattice.hpp"

#include <string>
#include <vector>

namespace typek {

// A(L) presented by generators g_1..g_k with orders d_1 | d_2 | ... (all > 1)
// and rational lifts of the generators into L tensor Q (basis coordinates).
struct DiscGroup {
  std::vector<Int> orders;
  QMat lifts;    // row i = lift of g_i in ambient basis coordinates
  QMat pairing;  // pairing(i, j) = <lift_i, lift_j> in Q

  Int order() const {
    Int n = 1;
    for (const Int& d : orders) n *= d;
    return n;
  }
};

// Computable when |disc L| <= 2^20; L must be nondegenerate and even.
DiscGroup discriminant_group(const Lattice& l);

// q(sum c_i g_i) in Q/2Z, represented canonically in [0, 2).
Rat q_value(const DiscGroup& g, const std::vector<Int>& coeffs);

// Bilinear pairing b(x, y) in Q/Z, represented canonically in [0, 1).
Rat pairing_value(const DiscGroup& g, const std::vector<Int>& x, const std::vector<Int>& y);

// Isomorphism-invariant data of the finite quadratic form: the abelian group
// type plus the multiset of (element order, q-value) pairs over all elements.
// Enumeration is guarded by |A(L)| <= 2^14.
struct DiscFingerprint {
  std::vector<Int> group_type;                    // orders d_1 | d_2 | ...
  std::vector<std::pair<Int, Rat>> value_multiset;  // sorted (order, q) pairs
  friend bool operator==(const DiscFingerprint&, const DiscFingerprint&) = default;
};

DiscFingerprint fingerprint(const Lattice& l);

// Negating a fingerprint replaces every q by -q in Q/2Z.
DiscFingerprint negate(const DiscFingerprint& f);

// True when the finite quadratic forms have equal fingerprints; with
// negate_second, the second form is compared after the sign flip q -> -q.
bool fingerprints_equal(const Lattice& a, const Lattice& b, bool negate_second = false);

// Even overlattice L subset M determined by an isotropic subgroup W of A(L).
// `generators` lists elements of A(L) by their coefficient tuples; the
// subgroup they generate must be totally isotropic (q = 0 on every element),
// otherwise the offending element is reported.  |A(M)| = |A(L)| / |W|^2.
struct Overlattice {
  Lattice lattice;
  QMat basis;  // rows = basis of M in the coordinates of L
  Int index;   // [M : L] = |W|
};

Overlattice overlattice(const Lattice& l, const std::vector<std::vector<Int>>& generators);

}  // namespace typek

#include "typek/group_action.hpp"

#include "typek/exact_linalg.hpp"

#include <map>
#include <sstream>

namespace typek {

namespace {

constexpr std::size_t kClosureGuard = 10'000;

std::string matrix_key(const IMat& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j) << ",";
  return os.str();
}

void check_isometry(const Lattice& l, const IMat& g) {
  if (g.rows() != l.rank() || g.cols() != l.rank())
    throw Error("LatticeAction: generator size must match the lattice rank");
  IMat t = g.transpose() * l.gram() * g;
  if (!exact_eq(t, l.gram()))
    throw Error("LatticeAction: generator does not preserve the Gram matrix");
}

}  // namespace

LatticeAction::LatticeAction(Lattice lattice, std::vector<IMat> generators)
    : lattice_(std::move(lattice)), generators_(std::move(generators)) {
  const Eigen::Index n = lattice_.rank();
  for (const IMat& g : generators_) check_isometry(lattice_, g);

  // Closure under multiplication; bounded to keep accidental infinite groups
  // from running away.
  std::map<std::string, std::size_t> seen;
  IMat id = IMat::Identity(n, n);
  elements_.push_back(id);
  seen[matrix_key(id)] = 0;
  std::vector<IMat> frontier = elements_;
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const IMat& a : frontier)
      for (const IMat& g : generators_) {
        IMat b = a * g;
        std::string key = matrix_key(b);
        if (seen.emplace(key, elements_.size()).second) {
          elements_.push_back(b);
          next.push_back(std::move(b));
          if (elements_.size() > kClosureGuard)
            throw Error("LatticeAction: group closure exceeds the 10^4 guard");
        }
      }
    frontier = std::move(next);
  }
}

Sublattice invariant_sublattice(const LatticeAction& action) {
  const Eigen::Index n = action.lattice().rank();
  const auto& gens = action.generators();
  IMat stacked(n * static_cast<Eigen::Index>(gens.size()), n);
  for (std::size_t t = 0; t < gens.size(); ++t)
    stacked.middleRows(static_cast<Eigen::Index>(t) * n, n) = gens[t] - IMat::Identity(n, n);
  IMat basis = saturated_kernel(stacked);
  IMat gram = basis * action.lattice().gram() * basis.transpose();
  return {basis, Lattice(std::move(gram))};
}

Sublattice coinvariant_sublattice(const LatticeAction& action) {
  Sublattice inv = invariant_sublattice(action);
  return orthogonal_complement(action.lattice(), inv.basis);
}

LatticeAction enriques_model() {
  Lattice k3 = lattice_K3();  // U + U + U + E8(-1) + E8(-1)
  const Eigen::Index n = k3.rank();
  IMat g = IMat::Zero(n, n);
  // -1 on the first U.
  g(0, 0) = -1;
  g(1, 1) = -1;
  // Swap the second and third U.
  for (Eigen::Index i = 0; i < 2; ++i) {
    g(2 + i, 4 + i) = 1;
    g(4 + i, 2 + i) = 1;
  }
  // Swap the two E8(-1) summands.
  for (Eigen::Index i = 0; i < 8; ++i) {
    g(6 + i, 14 + i) = 1;
    g(14 + i, 6 + i) = 1;
  }
  return LatticeAction(std::move(k3), {std::move(g)});
}

namespace {

void check_involution(const Lattice& l, const IMat& inv) {
  check_isometry(l, inv);
  IMat sq = inv * inv;
  if (!exact_eq(sq, IMat::Identity(l.rank(), l.rank())))
    throw Error("involution expected: matrix squared is not the identity");
}

}  // namespace

int glue_exponent(const LatticeAction& action, const IMat& involution) {
  const Lattice& l = action.lattice();
  if (!is_unimodular(l)) throw Error("glue_exponent: ambient lattice must be unimodular");
  check_involution(l, involution);
  const Eigen::Index n = l.rank();

  IMat inv_basis = saturated_kernel(IMat(involution - IMat::Identity(n, n)));
  IMat coinv_basis = orthogonal_complement(l, inv_basis).basis;
  if (inv_basis.rows() + coinv_basis.rows() != n)
    throw VerificationError("glue_exponent: rank(L^i) + rank(L_i) != rank(L)");

  IMat stacked(n, n);
  stacked.topRows(inv_basis.rows()) = inv_basis;
  stacked.bottomRows(coinv_basis.rows()) = coinv_basis;
  int a = 0;
  for (const Int& d : elementary_divisors(stacked)) {
    if (d == 1) continue;
    if (d == 2) {
      ++a;
      continue;
    }
    throw VerificationError("glue_exponent: glue group is not 2-elementary (divisor " +
                            d.str() + ")");
  }
  return a;
}

int anti_invariant_torsion(const Lattice& l, const IMat& involution) {
  check_involution(l, involution);
  const Eigen::Index n = l.rank();
  if (exact_eq(involution, IMat::Identity(n, n)))
    throw Error("anti_invariant_torsion: involution must act non-trivially");
  int count = 0;
  for (const Int& d : elementary_divisors(IMat(IMat::Identity(n, n) - involution))) {
    if (d == 1) continue;
    if (d == 2) {
      ++count;
      continue;
    }
    throw VerificationError("anti_invariant_torsion: torsion is not 2-elementary (divisor " +
                            d.str() + ")");
  }
  return count;
}

int anti_invariant_torsion(const LatticeAction& action, const IMat& involution) {
  int n = anti_invariant_torsion(action.lattice(), involution);
  int a = glue_exponent(action, involution);
  LatticeAction sub(action.lattice(), {involution});
  Eigen::Index coinv_rank = coinvariant_sublattice(sub).basis.rows();
  if (n != static_cast<int>(coinv_rank) - a)
    throw VerificationError("anti_invariant_torsion: n != rank(L_i) - a (" + std::to_string(n) +
                            " != " + std::to_string(coinv_rank) + " - " + std::to_string(a) + ")");
  return n;
}

int euler_phi(int d) {
  if (d < 1) throw Error("euler_phi: d must be >= 1");
  int r = d;
  for (const auto& [p, m] : factorize(Int(d))) {
    int pi = static_cast<int>(p);
    r = r / pi * (pi - 1);
  }
  return r;
}

int EigenvalueMultiset::total_rank() const {
  int r = 0;
  for (const auto& [d, m] : entries) r += m * euler_phi(d);
  return r;
}

Int cyclotomic_value_at_one(int d) {
  if (d < 2) throw Error("cyclotomic_value_at_one: d must be >= 2");
  auto fs = factorize(Int(d));
  return fs.size() == 1 ? fs.front().first : Int(1);
}

Int coinv_det(const EigenvalueMultiset& ev) {
  Int det = 1;
  for (const auto& [d, m] : ev.entries) {
    if (d == 1)
      throw Error("coinv_det: eigenvalue 1 cannot appear in a coinvariant lattice");
    if (m < 0) throw Error("coinv_det: negative multiplicity");
    det *= ipow(cyclotomic_value_at_one(d), static_cast<std::uint64_t>(m));
  }
  return det;
}

}  // namespace typek

#include "typek/quad_space.hpp"

#include "typek/exact_linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace typek {

namespace {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Legendre symbol (n | p) for odd prime p and n a p-adic unit.
int legendre(const Int& n_in, const Int& p) {
  Int n = n_in % p;
  if (n < 0) n += p;
  if (n == 0) throw Error("legendre: argument divisible by p");
  Int r = boost::multiprecision::powm(n, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

// The p-adic unit part of a nonzero rational as an exact rational.
Rat unit_part(const Rat& x, const Int& p, int* val) {
  *val = valuation(x, p);
  Rat u = x;
  Int pk = ipow(p, static_cast<std::uint64_t>(*val >= 0 ? *val : -*val));
  if (*val >= 0)
    u /= Rat(pk);
  else
    u *= Rat(pk);
  return u;
}

// Residue of a p-adic unit u modulo p^k (odd denominators inverted mod p^k).
Int unit_mod(const Rat& u, const Int& pk) {
  Int n = num(u) % pk, d = den(u) % pk;
  if (n < 0) n += pk;
  if (d < 0) d += pk;
  // Invert d modulo pk by Euclid.
  Int t = 0, new_t = 1, r = pk, new_r = d;
  while (new_r != 0) {
    Int q = r / new_r;
    Int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("unit_mod: argument is not a unit");
  if (t < 0) t += pk;
  return (n * t) % pk;
}

int eps2(const Int& x_mod8) { return static_cast<int>(((x_mod8 - 1) / 2) % 2); }
int omega2(const Int& x_mod8) { return static_cast<int>(((x_mod8 * x_mod8 - 1) / 8) % 2); }

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
  if (a == 0 || b == 0) throw Error("hilbert_symbol: arguments must be nonzero");
  if (!is_prime(p)) throw Error("hilbert_symbol: p must be prime");
  int alpha, beta;
  Rat u = unit_part(a, p, &alpha);
  Rat v = unit_part(b, p, &beta);
  if (p == 2) {
    Int um = unit_mod(u, Int(8)), vm = unit_mod(v, Int(8));
    int e = eps2(um) * eps2(vm) + alpha * omega2(vm) + beta * omega2(um);
    return e % 2 == 0 ? 1 : -1;
  }
  int e = (alpha % 2) * (beta % 2) * static_cast<int>(((p - 1) / 2) % 2);
  int s = e % 2 == 0 ? 1 : -1;
  if (beta % 2 != 0) s *= legendre(unit_mod(u, p), p);
  if (alpha % 2 != 0) s *= legendre(unit_mod(v, p), p);
  return s;
}

int hilbert_symbol_real(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw Error("hilbert_symbol: arguments must be nonzero");
  return (a < 0 && b < 0) ? -1 : 1;
}

int hasse_invariant(const std::vector<Rat>& diag, const Int& p) {
  int s = 1;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol(diag[i], diag[j], p);
  return s;
}

int hasse_invariant_real(const std::vector<Rat>& diag) {
  int s = 1;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol_real(diag[i], diag[j]);
  return s;
}

std::string QSpaceInvariants::summary() const {
  std::ostringstream os;
  os << "rank=" << rank << " sig=(" << sig.pos << "," << sig.neg << ") disc~" << disc_class
     << " hasse{";
  bool first = true;
  for (const auto& [p, h] : hasse) {
    os << (first ? "" : ",") << p << ":" << (h > 0 ? "+1" : "-1");
    first = false;
  }
  os << "}";
  return os.str();
}

QSpaceInvariants qspace_invariants(const Lattice& l, const std::vector<Int>& primes) {
  CongruenceDiag cd = congruent_diagonalize(to_rational(l.gram()));
  QSpaceInvariants inv;
  inv.rank = l.rank();
  Int prod = 1;
  for (Eigen::Index i = 0; i < cd.diag.size(); ++i) {
    const Rat& d = cd.diag(i);
    if (d == 0) throw Error("qspace_invariants: degenerate form");
    if (d > 0)
      ++inv.sig.pos;
    else
      ++inv.sig.neg;
    // d and d * den^2 represent the same square class.
    Int sf = squarefree_part(num(d) * den(d));
    inv.diag.push_back(sf);
    prod *= sf;
  }
  inv.disc_class = squarefree_part(prod);
  std::vector<Rat> diag_rat(inv.diag.begin(), inv.diag.end());
  for (const Int& p : primes) inv.hasse[p] = hasse_invariant(diag_rat, p);
  return inv;
}

QEquivalence q_equivalent(const Lattice& a, const Lattice& b) {
  // Bad primes: 2 together with every prime dividing a diagonal entry of
  // either squarefree diagonalization.  Away from these all Hasse
  // invariants are +1 for both forms.
  auto prime_support = [](const Lattice& l) {
    std::set<Int> ps;
    CongruenceDiag cd = congruent_diagonalize(to_rational(l.gram()));
    for (Eigen::Index i = 0; i < cd.diag.size(); ++i) {
      const Rat& d = cd.diag(i);
      if (d == 0) throw Error("q_equivalent: degenerate form");
      for (const auto& [p, m] : factorize(iabs(squarefree_part(num(d) * den(d))))) ps.insert(p);
    }
    return ps;
  };
  std::set<Int> bad = prime_support(a);
  for (const Int& p : prime_support(b)) bad.insert(p);
  bad.insert(2);

  QEquivalence out;
  out.primes.assign(bad.begin(), bad.end());
  out.lhs = qspace_invariants(a, out.primes);
  out.rhs = qspace_invariants(b, out.primes);
  out.equivalent = out.lhs.rank == out.rhs.rank && out.lhs.sig == out.rhs.sig &&
                   out.lhs.disc_class == out.rhs.disc_class && out.lhs.hasse == out.rhs.hasse;
  return out;
}

}  // namespace typek

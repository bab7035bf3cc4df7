#include "typek/disc_form.hpp"

#include "typek/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace typek {

namespace {

constexpr std::uint64_t kDiscGuard = 1u << 20;        // largest |disc| we present
constexpr std::uint64_t kEnumerationGuard = 1u << 14;  // largest group we enumerate

std::string coeffs_to_string(const std::vector<Int>& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

}  // namespace

DiscGroup discriminant_group(const Lattice& l) {
  if (!is_even(l)) throw Error("discriminant_group: lattice must be even");
  Int d = disc(l);
  if (d == 0) throw Error("discriminant_group: lattice must be nondegenerate");
  if (iabs(d) > kDiscGuard)
    throw Error("discriminant_group: |disc| exceeds the 2^20 guard");

  // Z^n / G Z^n with G = gram: Smith form U G V = D gives generators
  // (1/d_i) * (column i of V) for the dual quotient.
  SnfResult snf = smith_normal_form(l.gram());
  const Eigen::Index n = l.rank();
  std::vector<Int> orders;
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (snf.d(i, i) > 1) {
      orders.push_back(snf.d(i, i));
      idx.push_back(i);
    }
  }
  DiscGroup g;
  g.orders = std::move(orders);
  const Eigen::Index k = static_cast<Eigen::Index>(g.orders.size());
  g.lifts.resize(k, n);
  for (Eigen::Index t = 0; t < k; ++t) {
    Rat inv = make_rat(Int(1), g.orders[static_cast<std::size_t>(t)]);
    for (Eigen::Index j = 0; j < n; ++j) g.lifts(t, j) = inv * Rat(snf.v(j, idx[static_cast<std::size_t>(t)]));
  }
  g.pairing = g.lifts * to_rational(l.gram()) * g.lifts.transpose();
  return g;
}

Rat q_value(const DiscGroup& g, const std::vector<Int>& coeffs) {
  const Eigen::Index k = g.pairing.rows();
  if (static_cast<Eigen::Index>(coeffs.size()) != k)
    throw Error("q_value: coefficient tuple has wrong length");
  Rat v = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      v += Rat(coeffs[static_cast<std::size_t>(i)]) * Rat(coeffs[static_cast<std::size_t>(j)]) *
           g.pairing(i, j);
  return mod2(v);
}

Rat pairing_value(const DiscGroup& g, const std::vector<Int>& x, const std::vector<Int>& y) {
  const Eigen::Index k = g.pairing.rows();
  if (static_cast<Eigen::Index>(x.size()) != k || static_cast<Eigen::Index>(y.size()) != k)
    throw Error("pairing_value: coefficient tuple has wrong length");
  Rat v = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      v += Rat(x[static_cast<std::size_t>(i)]) * Rat(y[static_cast<std::size_t>(j)]) * g.pairing(i, j);
  return mod1(v);
}

namespace {

// Visit every coefficient tuple of the product of cyclic groups.
template <typename F>
void for_each_element(const std::vector<Int>& orders, F&& f) {
  std::vector<Int> c(orders.size(), Int(0));
  for (;;) {
    f(c);
    std::size_t i = 0;
    while (i < c.size()) {
      c[i] += 1;
      if (c[i] < orders[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) return;
  }
}

Int element_order(const std::vector<Int>& orders, const std::vector<Int>& c) {
  Int o = 1;
  for (std::size_t i = 0; i < c.size(); ++i)
    o = lcm(o, orders[i] / gcd(c[i], orders[i]));
  return o;
}

}  // namespace

DiscFingerprint fingerprint(const Lattice& l) {
  DiscGroup g = discriminant_group(l);
  if (g.order() > kEnumerationGuard)
    throw Error("fingerprint: group order exceeds the 2^14 enumeration guard");
  DiscFingerprint f;
  f.group_type = g.orders;
  for_each_element(g.orders, [&](const std::vector<Int>& c) {
    f.value_multiset.emplace_back(element_order(g.orders, c), q_value(g, c));
  });
  std::sort(f.value_multiset.begin(), f.value_multiset.end());
  return f;
}

DiscFingerprint negate(const DiscFingerprint& f) {
  DiscFingerprint n;
  n.group_type = f.group_type;
  n.value_multiset.reserve(f.value_multiset.size());
  for (const auto& [o, q] : f.value_multiset) n.value_multiset.emplace_back(o, mod2(-q));
  std::sort(n.value_multiset.begin(), n.value_multiset.end());
  return n;
}

bool fingerprints_equal(const Lattice& a, const Lattice& b, bool negate_second) {
  DiscFingerprint fa = fingerprint(a);
  DiscFingerprint fb = fingerprint(b);
  if (negate_second) fb = negate(fb);
  return fa == fb;
}

Overlattice overlattice(const Lattice& l, const std::vector<std::vector<Int>>& generators) {
  DiscGroup g = discriminant_group(l);
  const std::size_t k = g.orders.size();
  for (const auto& w : generators)
    if (w.size() != k) throw Error("overlattice: generator tuple has wrong length");

  // Subgroup closure of the generators inside the product of cyclic groups.
  auto normalize = [&](std::vector<Int> c) {
    for (std::size_t i = 0; i < k; ++i) {
      c[i] %= g.orders[i];
      if (c[i] < 0) c[i] += g.orders[i];
    }
    return c;
  };
  std::vector<std::vector<Int>> subgroup{std::vector<Int>(k, Int(0))};
  std::vector<std::vector<Int>> frontier = subgroup;
  auto contains = [&](const std::vector<Int>& c) {
    return std::find(subgroup.begin(), subgroup.end(), c) != subgroup.end();
  };
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& a : frontier)
      for (const auto& gen : generators) {
        std::vector<Int> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = a[i] + gen[i];
        c = normalize(std::move(c));
        if (!contains(c)) {
          subgroup.push_back(c);
          next.push_back(c);
          if (subgroup.size() > kEnumerationGuard)
            throw Error("overlattice: subgroup exceeds the 2^14 enumeration guard");
        }
      }
    frontier = std::move(next);
  }

  for (const auto& w : subgroup) {
    Rat q = q_value(g, w);
    if (q != 0)
      throw Error("overlattice: subgroup element " + coeffs_to_string(w) +
                  " is not isotropic (q = " + to_string(q) + ")");
  }

  // Basis of M = L + Z<lifts of generators>: clear denominators, take the
  // integer row-span basis, then scale back.
  const Eigen::Index n = l.rank();
  Int scale = 1;
  std::vector<QVec> gen_lifts;
  for (const auto& wc : generators) {
    QVec v = QVec::Zero(n);
    for (std::size_t i = 0; i < k; ++i)
      v += Rat(wc[i]) * g.lifts.row(static_cast<Eigen::Index>(i)).transpose();
    for (Eigen::Index j = 0; j < n; ++j) scale = lcm(scale, den(v(j)));
    gen_lifts.push_back(std::move(v));
  }
  IMat stacked(n + static_cast<Eigen::Index>(gen_lifts.size()), n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) stacked(i, j) = (i == j) ? scale : Int(0);
  for (std::size_t t = 0; t < gen_lifts.size(); ++t)
    for (Eigen::Index j = 0; j < n; ++j) {
      Rat scaled = Rat(scale) * gen_lifts[t](j);
      stacked(n + static_cast<Eigen::Index>(t), j) = num(scaled);  // integral by choice of scale
    }
  IMat b = row_span_basis(stacked);
  if (b.rows() != n) throw VerificationError("overlattice: basis rank mismatch");

  QMat basis(n, n);
  Rat inv_scale = make_rat(Int(1), scale);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) basis(i, j) = inv_scale * Rat(b(i, j));
  QMat gram_q = basis * to_rational(l.gram()) * basis.transpose();
  IMat gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (den(gram_q(i, j)) != 1)
        throw VerificationError("overlattice: glued Gram matrix is not integral");
      gram(i, j) = num(gram_q(i, j));
    }
  Lattice m(std::move(gram));
  if (!is_even(m)) throw VerificationError("overlattice: glued lattice is not even");

  Int w_order(subgroup.size());
  if (iabs(disc(l)) != iabs(disc(m)) * w_order * w_order)
    throw VerificationError("overlattice: |A(M)| != |A(L)| / |W|^2");
  return {std::move(m), std::move(basis), w_order};
}

}  // namespace typek

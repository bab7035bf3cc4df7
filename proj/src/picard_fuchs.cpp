#include "typek/picard_fuchs.hpp"

#include "typek/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace typek {

namespace {

int total_degree(const std::vector<int>& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

std::string monomial_name(const std::vector<int>& e) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << "z" << (i + 1);
    if (e[i] > 1) os << "^" << e[i];
  }
  return any ? os.str() : "1";
}

// All exponent vectors in `nvars` variables of total degree exactly `d`.
void monomials_of_degree(int nvars, int d, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
}

}  // namespace

// ---------------------------------------------------------------------------
// ThetaPoly

ThetaPoly ThetaPoly::constant(int nvars, const Rat& c) {
  ThetaPoly p;
  p.nvars = nvars;
  if (c != 0) p.terms[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = c;
  return p;
}

ThetaPoly ThetaPoly::theta(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error("ThetaPoly::theta: index out of range");
  ThetaPoly p;
  p.nvars = nvars;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.terms[std::move(e)] = Rat(1);
  return p;
}

Rat ThetaPoly::evaluate(const std::vector<Int>& m) const {
  if (static_cast<int>(m.size()) != nvars) throw Error("ThetaPoly::evaluate: arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= Rat(m[i]);
    acc += t;
  }
  return acc;
}

ThetaPoly ThetaPoly::dtheta(int j) const {
  if (j < 0 || j >= nvars) throw Error("ThetaPoly::dtheta: index out of range");
  ThetaPoly p;
  p.nvars = nvars;
  for (const auto& [e, c] : terms) {
    std::size_t jx = static_cast<std::size_t>(j);
    if (e[jx] == 0) continue;
    std::vector<int> d = e;
    d[jx] -= 1;
    Rat add = c * Rat(e[jx]);
    auto [it, fresh] = p.terms.emplace(std::move(d), add);
    if (!fresh) {
      it->second += add;
      if (it->second == 0) p.terms.erase(it);
    }
  }
  return p;
}

ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.nvars != b.nvars) throw Error("ThetaPoly: arity mismatch");
  ThetaPoly s = a;
  for (const auto& [e, c] : b.terms) {
    auto [it, fresh] = s.terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) s.terms.erase(it);
    }
  }
  return s;
}

ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b) { return a + Rat(-1) * b; }

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.nvars != b.nvars) throw Error("ThetaPoly: arity mismatch");
  ThetaPoly s;
  s.nvars = a.nvars;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rat add = ca * cb;
      auto [it, fresh] = s.terms.emplace(std::move(e), add);
      if (!fresh) {
        it->second += add;
        if (it->second == 0) s.terms.erase(it);
      }
    }
  return s;
}

ThetaPoly operator*(const Rat& c, const ThetaPoly& a) {
  ThetaPoly s;
  s.nvars = a.nvars;
  if (c == 0) return s;
  for (const auto& [e, v] : a.terms) s.terms[e] = c * v;
  return s;
}

// ---------------------------------------------------------------------------
// ThetaOperator

void ThetaOperator::add_term(std::vector<int> z_exponent, ThetaPoly poly) {
  if (static_cast<int>(z_exponent.size()) != nvars || poly.nvars != nvars)
    throw Error("ThetaOperator::add_term: arity mismatch");
  for (int x : z_exponent)
    if (x < 0) throw Error("ThetaOperator::add_term: negative z-exponent");
  for (auto& [e, p] : terms)
    if (e == z_exponent) {
      p = p + poly;
      return;
    }
  terms.emplace_back(std::move(z_exponent), std::move(poly));
}

int ThetaOperator::min_shift() const {
  if (terms.empty()) throw Error("ThetaOperator: empty operator");
  int m = total_degree(terms.front().first);
  for (const auto& [e, p] : terms) m = std::min(m, total_degree(e));
  return m;
}

ThetaOperator operator+(const ThetaOperator& a, const ThetaOperator& b) {
  if (a.nvars != b.nvars) throw Error("ThetaOperator: arity mismatch");
  ThetaOperator s = a;
  for (const auto& [e, p] : b.terms) s.add_term(e, p);
  return s;
}

ThetaOperator operator*(const Rat& c, const ThetaOperator& a) {
  ThetaOperator s(a.nvars);
  for (const auto& [e, p] : a.terms) {
    ThetaPoly cp = c * p;
    if (!cp.terms.empty()) s.terms.emplace_back(e, std::move(cp));
  }
  return s;
}

MultiSeries apply(const ThetaOperator& op, const MultiSeries& f) {
  if (op.nvars != f.nvars()) throw Error("apply: operator/series arity mismatch");
  // z^alpha P(T) f is correct to f.trunc() + |alpha|; the overall bound is
  // f.trunc() + min_shift.
  int out_trunc = f.trunc() + op.min_shift();
  MultiSeries acc(f.nvars(), out_trunc);
  std::vector<Int> m(static_cast<std::size_t>(f.nvars()));
  for (const auto& [alpha, poly] : op.terms) {
    int shift = total_degree(alpha);
    for (const auto& [e, c] : f.terms()) {
      if (total_degree(e) + shift > out_trunc) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = e[i];
      Rat v = poly.evaluate(m);
      if (v == 0) continue;
      MultiSeries::Exponent shifted(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] + alpha[i];
      acc.set_coeff(shifted, acc.coeff(shifted) + c * v);
    }
  }
  return acc;
}

MultiSeries apply_dtheta(const ThetaOperator& op, int j, const MultiSeries& f) {
  ThetaOperator d(op.nvars);
  for (const auto& [e, p] : op.terms) {
    ThetaPoly dp = p.dtheta(j);
    if (!dp.terms.empty()) d.terms.emplace_back(e, std::move(dp));
  }
  if (d.terms.empty()) return MultiSeries(f.nvars(), f.trunc());
  return apply(d, f);
}

// ---------------------------------------------------------------------------
// Degree-by-degree solver

namespace {

// Solve op_i(x) = rhs_i with x(0) = c0 through total degree `trunc`.
MultiSeries solve_linear(const std::vector<ThetaOperator>& ops,
                         const std::vector<MultiSeries>& rhs, const Rat& c0, int trunc) {
  if (ops.empty()) throw Error("solve: no operators");
  const int nv = ops.front().nvars;
  for (const ThetaOperator& op : ops)
    if (op.nvars != nv) throw Error("solve: operator arity mismatch");

  MultiSeries x = MultiSeries::constant(nv, trunc, c0);
  std::vector<Int> m(static_cast<std::size_t>(nv));

  // rhs coefficient with silent zero beyond its truncation window (those
  // equations are simply not checked at this truncation).
  auto rhs_coeff = [&](std::size_t i, const std::vector<int>& mu) -> Rat {
    if (rhs.empty()) return Rat(0);
    const MultiSeries& r = rhs[i];
    if (total_degree(mu) > r.trunc()) return Rat(0);
    return r.coeff(mu);
  };

  for (int k = 0; k <= trunc; ++k) {
    std::vector<std::vector<int>> unknowns;
    if (k > 0) monomials_of_degree(nv, k, unknowns);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < unknowns.size(); ++i) index[unknowns[i]] = i;

    // Collect equations: operator i at target monomial mu with
    // |mu| = k + min_shift(op_i) touches unknowns of degree exactly k and
    // solved coefficients of lower degree.
    QMat a(0, static_cast<Eigen::Index>(unknowns.size()));
    QVec b(0);
    std::vector<std::pair<std::size_t, std::vector<int>>> eq_tags;
    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
      const ThetaOperator& op = ops[oi];
      int dmin = op.min_shift();
      std::vector<std::vector<int>> targets;
      monomials_of_degree(nv, k + dmin, targets);
      for (const auto& mu : targets) {
        QVec row = QVec::Zero(static_cast<Eigen::Index>(unknowns.size()));
        Rat rhs_val = rhs_coeff(oi, mu);
        bool nontrivial = false;
        for (const auto& [alpha, poly] : op.terms) {
          std::vector<int> src(mu.size());
          bool ok = true;
          for (std::size_t i = 0; i < mu.size(); ++i) {
            src[i] = mu[i] - alpha[i];
            if (src[i] < 0) ok = false;
          }
          if (!ok) continue;
          for (std::size_t i = 0; i < src.size(); ++i) m[i] = src[i];
          Rat coef = poly.evaluate(m);
          if (coef == 0) continue;
          nontrivial = true;
          int deg = total_degree(src);
          if (deg == k && k > 0) {
            row(static_cast<Eigen::Index>(index.at(src))) += coef;
          } else {
            rhs_val -= coef * x.coeff(src);
          }
        }
        if (!nontrivial && rhs_val == 0) continue;
        a.conservativeResize(a.rows() + 1, Eigen::NoChange);
        a.row(a.rows() - 1) = row.transpose();
        b.conservativeResize(b.size() + 1);
        b(b.size() - 1) = rhs_val;
        eq_tags.emplace_back(oi, mu);
      }
    }

    if (unknowns.empty()) {
      for (Eigen::Index i = 0; i < b.size(); ++i)
        if (b(i) != 0)
          throw SolveError(SolveError::Kind::Inconsistent, k, monomial_name(eq_tags[i].second),
                           "solve: inconsistent at degree " + std::to_string(k) + ", monomial " +
                               monomial_name(eq_tags[i].second));
      continue;
    }

    // Gaussian elimination with full inconsistency/freedom detection.
    QMat aw = a;
    QVec bw = b;
    std::vector<bool> pivoted(unknowns.size(), false);
    Eigen::Index row_at = 0;
    for (std::size_t c = 0; c < unknowns.size() && row_at < aw.rows(); ++c) {
      Eigen::Index piv = -1;
      for (Eigen::Index r = row_at; r < aw.rows(); ++r)
        if (aw(r, static_cast<Eigen::Index>(c)) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      aw.row(row_at).swap(aw.row(piv));
      std::swap(bw(row_at), bw(piv));
      for (Eigen::Index r = 0; r < aw.rows(); ++r) {
        if (r == row_at || aw(r, static_cast<Eigen::Index>(c)) == 0) continue;
        Rat f = aw(r, static_cast<Eigen::Index>(c)) / aw(row_at, static_cast<Eigen::Index>(c));
        aw.row(r) -= f * aw.row(row_at);
        bw(r) -= f * bw(row_at);
      }
      pivoted[c] = true;
      ++row_at;
    }
    for (Eigen::Index r = row_at; r < aw.rows(); ++r)
      if (bw(r) != 0)
        throw SolveError(SolveError::Kind::Inconsistent, k, "?",
                         "solve: inconsistent at degree " + std::to_string(k));
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (!pivoted[c])
        throw SolveError(SolveError::Kind::Underdetermined, k, monomial_name(unknowns[c]),
                         "solve: underdetermined at degree " + std::to_string(k) +
                             ", free monomial " + monomial_name(unknowns[c]));
    // Read the unique solution.
    Eigen::Index r = 0;
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      Rat value = bw(r) / aw(r, static_cast<Eigen::Index>(c));
      x.set_coeff(unknowns[c], value);
      ++r;
    }
  }
  return x;
}

}  // namespace

MultiSeries solve_regular(const std::vector<ThetaOperator>& ops, int trunc) {
  return solve_linear(ops, {}, Rat(1), trunc);
}

MultiSeries solve_log(const std::vector<ThetaOperator>& ops, const MultiSeries& phi0, int j) {
  std::vector<MultiSeries> rhs;
  rhs.reserve(ops.size());
  for (const ThetaOperator& op : ops) rhs.push_back(-apply_dtheta(op, j, phi0));
  return solve_linear(ops, rhs, Rat(0), phi0.trunc());
}

MirrorMaps mirror_maps(const MultiSeries& phi0, const std::vector<MultiSeries>& logs) {
  const int nv = phi0.nvars();
  if (static_cast<int>(logs.size()) != nv)
    throw Error("mirror_maps: need one log companion per variable");
  MirrorMaps mm;
  MultiSeries inv_phi0 = phi0.inverse();
  for (int i = 0; i < nv; ++i) {
    const MultiSeries& r = logs[static_cast<std::size_t>(i)];
    mm.q_units.push_back(exp_series((r * inv_phi0).truncated(phi0.trunc())));
    mm.q_of_z.push_back(MultiSeries::variable(nv, phi0.trunc(), i) * mm.q_units.back());
  }
  mm.z_of_q = revert_map(mm.q_units);
  return mm;
}

// ---------------------------------------------------------------------------
// Families

std::vector<ThetaOperator> d12_operators() {
  const int nv = 2;
  ThetaPoly t1 = ThetaPoly::theta(nv, 0), t2 = ThetaPoly::theta(nv, 1);
  ThetaPoly s = t1 + t2;
  ThetaPoly c3 = ThetaPoly::constant(nv, Rat(3)), c1 = ThetaPoly::constant(nv, Rat(1));
  ThetaPoly factor = (Rat(4) * s + c3) * (Rat(4) * s + c1);
  std::vector<ThetaOperator> ops;
  for (int i = 0; i < nv; ++i) {
    ThetaOperator op(nv);
    ThetaPoly ti = ThetaPoly::theta(nv, i);
    op.add_term({0, 0}, ti * ti);
    std::vector<int> ei(2, 0);
    ei[static_cast<std::size_t>(i)] = 1;
    op.add_term(ei, Rat(-4) * factor);
    ops.push_back(std::move(op));
  }
  return ops;
}

ThetaOperator elliptic_operator() {
  // (8z - 1)(z + 1) T^2 + z (16z + 7) T + 2z (4z + 1)
  //   = -T^2 + z (7 T^2 + 7 T + 2) + z^2 (8 T^2 + 16 T + 8).
  const int nv = 1;
  ThetaPoly t = ThetaPoly::theta(nv, 0);
  ThetaPoly t2 = t * t;
  ThetaOperator op(nv);
  op.add_term({0}, Rat(-1) * t2);
  op.add_term({1}, Rat(7) * t2 + Rat(7) * t + ThetaPoly::constant(nv, Rat(2)));
  op.add_term({2}, Rat(8) * t2 + Rat(16) * t + ThetaPoly::constant(nv, Rat(8)));
  return op;
}

std::vector<ThetaOperator> d8_basis_operators() {
  const int nv = 3;
  ThetaPoly t1 = ThetaPoly::theta(nv, 0), t2 = ThetaPoly::theta(nv, 1),
            t3 = ThetaPoly::theta(nv, 2);
  ThetaPoly sum = t1 + t2 + t3;
  ThetaPoly cross = t1 * t2 + t2 * t3 + t3 * t1;
  ThetaPoly mixed = Rat(-128) * cross + Rat(-64) * sum + ThetaPoly::constant(nv, Rat(-12));
  auto sq = [](const ThetaPoly& p) { return p * p; };

  std::vector<ThetaOperator> ops;
  // Operators with a z-free head T_i^2.
  struct Head {
    int var;            // T_var^2 is the z-free part
    int shift_a;        // coefficient z_{shift_a} carries the mixed block
    int extra_var;      // -64 z_shift_a T_extra^2 also appears
    int shift_b;        // second shift with -64 z_shift_b T_var^2
  };
  const Head heads[3] = {{0, 0, 2, 1}, {1, 1, 0, 2}, {2, 2, 1, 0}};
  for (const Head& h : heads) {
    ThetaOperator op(nv);
    ThetaPoly tv = ThetaPoly::theta(nv, h.var);
    op.add_term({0, 0, 0}, sq(tv));
    std::vector<int> ea(3, 0);
    ea[static_cast<std::size_t>(h.shift_a)] = 1;
    op.add_term(ea, Rat(-64) * sq(tv) + Rat(-64) * sq(ThetaPoly::theta(nv, h.extra_var)) + mixed);
    std::vector<int> eb(3, 0);
    eb[static_cast<std::size_t>(h.shift_b)] = 1;
    op.add_term(eb, Rat(-64) * sq(tv));
    ops.push_back(std::move(op));
  }
  // Pure difference operators 12 (z_i T_j^2 - z_j T_i^2).
  struct Diff {
    int zi, tj, zj, ti;
  };
  const Diff diffs[3] = {{0, 2, 2, 0}, {1, 0, 0, 1}, {2, 1, 1, 2}};
  for (const Diff& d : diffs) {
    ThetaOperator op(nv);
    std::vector<int> ei(3, 0), ej(3, 0);
    ei[static_cast<std::size_t>(d.zi)] = 1;
    ej[static_cast<std::size_t>(d.zj)] = 1;
    op.add_term(ei, Rat(12) * sq(ThetaPoly::theta(nv, d.tj)));
    op.add_term(ej, Rat(-12) * sq(ThetaPoly::theta(nv, d.ti)));
    ops.push_back(std::move(op));
  }
  return ops;
}

D12Model compute_d12(int trunc) {
  if (trunc < 2) throw Error("compute_d12: trunc must be >= 2");
  D12Model model;
  model.trunc = trunc;
  std::vector<ThetaOperator> ops = d12_operators();
  model.phi0 = solve_regular(ops, trunc);
  model.r1 = solve_log(ops, model.phi0, 0);
  model.r2 = solve_log(ops, model.phi0, 1);
  model.maps = mirror_maps(model.phi0, {model.r1, model.r2});

  // Yukawa couplings.  With z_k = q_k V_k(q) define the logarithmic
  // Jacobian entries E_{k,i} = q_i d z_k / d q_i / z_k; then
  //   K_{ij} = [ sum_k z_k E_{k,i} E_{k,j} / 2^5
  //            + (1 - 64 (z_1 + z_2)) (E_{1i} E_{2j} + E_{2i} E_{1j}) / 2^12 ]
  //            / (W(z) phi0(z)^2)  evaluated at z = z(q),
  // where W = 1 - 2^7 (z_1 + z_2 + 2^6 z_1 z_2) + 2^12 (z_1^2 + z_2^2).
  const int nv = 2;
  const auto& z_of_q = model.maps.z_of_q;
  auto qdq = [&](const MultiSeries& f, int i) {
    return MultiSeries::variable(nv, f.trunc(), i) * f.derivative(i);
  };
  std::vector<std::vector<MultiSeries>> e(2, std::vector<MultiSeries>(2));
  for (int k = 0; k < 2; ++k) {
    MultiSeries vk = z_of_q[static_cast<std::size_t>(k)].divide_monomial([&] {
      std::vector<int> d(2, 0);
      d[static_cast<std::size_t>(k)] = 1;
      return d;
    }());
    MultiSeries inv_vk = vk.inverse();
    for (int i = 0; i < 2; ++i) {
      MultiSeries delta = MultiSeries::constant(nv, vk.trunc(), k == i ? Rat(1) : Rat(0));
      e[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          delta + (qdq(vk, i) * inv_vk).truncated(vk.trunc());
    }
  }
  // The E entries are only correct to trunc - 1 (divide_monomial consumed one
  // order), so every coupling is computed at that bound.
  const int t = trunc - 1;
  MultiSeries z1 = z_of_q[0].truncated(t);
  MultiSeries z2 = z_of_q[1].truncated(t);
  MultiSeries one = MultiSeries::constant(nv, t, Rat(1));
  MultiSeries w = one - Rat(128) * (z1 + z2) - Rat(128 * 64) * (z1 * z2) +
                  Rat(4096) * (z1 * z1 + z2 * z2);
  MultiSeries phi0_q = model.phi0.substitute(z_of_q);
  MultiSeries denom_inv = (w * phi0_q * phi0_q).truncated(t).inverse();
  MultiSeries head = one - Rat(64) * (z1 + z2);
  auto coupling = [&](int i, int j) {
    std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
    MultiSeries acc(nv, t);
    acc = acc + make_rat(Int(1), Int(32)) * (z1 * e[0][si] * e[0][sj] + z2 * e[1][si] * e[1][sj]);
    acc = acc + make_rat(Int(1), Int(4096)) * (head * (e[0][si] * e[1][sj] + e[1][si] * e[0][sj]));
    return (acc.truncated(t) * denom_inv).truncated(t);
  };
  model.k11 = coupling(0, 0);
  model.k12 = coupling(0, 1);
  model.k22 = coupling(1, 1);
  return model;
}

namespace {

// G = theta2^8 / (theta3^4 + theta4^4)^2 as an integer-exponent series.
MultiSeries theta_ratio_g(int trunc) {
  Rat t(trunc + 1);  // margin for the inversion
  PuiseuxSeries t2 = theta2(t), t3 = theta3(t), t4 = theta4(t);
  PuiseuxSeries f = t3.pow(4) + t4.pow(4);
  PuiseuxSeries g = t2.pow(8) * f.pow(2).inverse();
  return g.to_integer_series().truncated(trunc);
}

// F/2 = (theta3^4 + theta4^4)/2, constant term 1.
MultiSeries theta_f_half(int trunc) {
  Rat t(trunc);
  PuiseuxSeries f = theta3(t).pow(4) + theta4(t).pow(4);
  return (make_rat(Int(1), Int(2)) * f).to_integer_series();
}

MultiSeries lift_univariate(const MultiSeries& f, int nvars, int which) {
  std::vector<MultiSeries> args{MultiSeries::variable(nvars, f.trunc(), which)};
  return f.substitute(args);
}

}  // namespace

MultiSeries d12_theta_z_of_q(int which, int trunc) {
  if (which != 0 && which != 1) throw Error("d12_theta_z_of_q: which must be 0 or 1");
  MultiSeries g = theta_ratio_g(trunc);
  MultiSeries g_self = lift_univariate(g, 2, which);
  MultiSeries g_other = lift_univariate(g, 2, 1 - which);
  MultiSeries one = MultiSeries::constant(2, trunc, Rat(1));
  return (make_rat(Int(1), Int(64)) * (g_self * (one - g_other))).truncated(trunc);
}

MultiSeries d12_theta_phi0_of_q(int trunc) {
  MultiSeries fh = theta_f_half(trunc);
  MultiSeries prod = lift_univariate(fh, 2, 0) * lift_univariate(fh, 2, 1);
  return sqrt_series(prod.truncated(trunc));
}

namespace {

// Shared margin for the eta-quotient inversions: the reciprocal of a unit on
// the 1/144 grid loses a little reach, so compute past the target and cut.
Rat eta_work(const Rat& target) { return target + 4; }

}  // namespace

PuiseuxSeries elliptic_eta_z_of_q(const Rat& target) {
  Rat work = eta_work(target);
  PuiseuxSeries e1 = eta_scaled(1, work), e2 = eta_scaled(2, work), e3 = eta_scaled(3, work),
                e6 = eta_scaled(6, work);
  return (e1.pow(3) * e6 * (e2.pow(3) * e3).inverse()).pow(3).truncated(target);
}

PuiseuxSeries elliptic_eta_phi0_of_q(const Rat& target) {
  Rat work = eta_work(target);
  PuiseuxSeries e1 = eta_scaled(1, work), e2 = eta_scaled(2, work), e3 = eta_scaled(3, work),
                e6 = eta_scaled(6, work);
  return (e2.pow(6) * e3 * (e1.pow(3) * e6.pow(2)).inverse()).truncated(target);
}

PuiseuxSeries compose(const MultiSeries& f, const PuiseuxSeries& g, const Rat& target) {
  if (f.nvars() != 1) throw Error("compose: outer series must be univariate");
  Rat vg = g.valuation();
  if (vg <= 0) throw Error("compose: inner series must have positive valuation");
  if (Rat(f.trunc() + 1) * vg <= target)
    throw Error("compose: outer truncation too small for the requested target");
  if (g.trunc() < target) throw Error("compose: inner truncation below the requested target");
  PuiseuxSeries acc(target);
  PuiseuxSeries p = PuiseuxSeries::monomial(Rat(0), Rat(1), g.trunc());
  int prev = 0;
  // Terms of f in increasing degree; reuse the running power of g.
  for (const auto& [e, c] : f.terms()) {
    int k = e[0];
    for (; prev < k; ++prev) p = p * g;
    acc = acc + c * p.truncated(std::max(target, Rat(0)));
  }
  return acc.truncated(target);
}

}  // namespace typek

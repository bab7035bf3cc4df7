// Exact linear algebra over Z and Q on Eigen dense matrices.
//
// Everything here is elimination-based and exact; no floating point.  The
// routines accept Eigen expressions and return plain matrices.
#pragma once

#include "typek/numeric.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace typek {

// ---------------------------------------------------------------------------
// Determinant (Bareiss fraction-free elimination; exact, O(n^3)).

template <typename Derived>
Int det_int(const Eigen::MatrixBase<Derived>& a_in) {
  if (a_in.rows() != a_in.cols()) throw Error("det_int: matrix must be square");
  const Eigen::Index n = a_in.rows();
  if (n == 0) return 1;
  IMat a = a_in;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // exact division (Bareiss)
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <typename Derived>
Eigen::Index rank_int(const Eigen::MatrixBase<Derived>& a_in) {
  QMat a = a_in.template cast<Rat>();
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(r).swap(a.row(piv));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      a.row(i) -= f * a.row(r);
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form.

// u * a * v = d with u, v unimodular and d diagonal, nonzero entries first,
// each dividing the next.
struct SnfResult {
  IMat d, u, v;

  std::vector<Int> divisors() const {
    std::vector<Int> ds;
    const Eigen::Index n = std::min(d.rows(), d.cols());
    for (Eigen::Index i = 0; i < n; ++i)
      if (d(i, i) != 0) ds.push_back(d(i, i));
    return ds;
  }
};

namespace detail {

// Worker that also tracks v^{-1} (needed for kernel/row-span helpers).
struct SnfWorker {
  IMat d, u, v, vinv;

  explicit SnfWorker(const IMat& a) {
    d = a;
    const Eigen::Index r = a.rows(), c = a.cols();
    u = IMat::Identity(r, r);
    v = IMat::Identity(c, c);
    vinv = IMat::Identity(c, c);
    run();
  }

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    d.row(i).swap(d.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    d.col(i).swap(d.col(j));
    v.col(i).swap(v.col(j));
    vinv.row(i).swap(vinv.row(j));
  }
  // row i += f * row j
  void add_row(Eigen::Index i, Eigen::Index j, const Int& f) {
    d.row(i) += f * d.row(j);
    u.row(i) += f * u.row(j);
  }
  // col i += f * col j
  void add_col(Eigen::Index i, Eigen::Index j, const Int& f) {
    d.col(i) += f * d.col(j);
    v.col(i) += f * v.col(j);
    vinv.row(j) -= f * vinv.row(i);
  }
  void negate_row(Eigen::Index i) {
    d.row(i) = -d.row(i);
    u.row(i) = -u.row(i);
  }

  void run() {
    const Eigen::Index rows = d.rows(), cols = d.cols();
    const Eigen::Index steps = std::min(rows, cols);
    for (Eigen::Index t = 0; t < steps; ++t) {
      for (;;) {
        // Smallest nonzero |entry| in the trailing block becomes the pivot.
        Eigen::Index pi = -1, pj = -1;
        Int best = 0;
        for (Eigen::Index i = t; i < rows; ++i)
          for (Eigen::Index j = t; j < cols; ++j) {
            if (d(i, j) == 0) continue;
            Int a = iabs(d(i, j));
            if (pi < 0 || a < best) {
              best = a;
              pi = i;
              pj = j;
            }
          }
        if (pi < 0) {
          for (Eigen::Index i = t; i < steps; ++i) d(i, i) = 0;
          return finish();
        }
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);

        bool dirty = false;
        for (Eigen::Index i = t + 1; i < rows; ++i) {
          if (d(i, t) == 0) continue;
          add_row(i, t, -floor_div(d(i, t), d(t, t)));
          if (d(i, t) != 0) dirty = true;  // remainder smaller than pivot survives
        }
        if (dirty) continue;
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (d(t, j) == 0) continue;
          add_col(j, t, -floor_div(d(t, j), d(t, t)));
          if (d(t, j) != 0) dirty = true;
        }
        if (dirty) continue;
        // Enforce the divisibility chain: fold in any entry the pivot misses.
        bool fixed = false;
        for (Eigen::Index i = t + 1; i < rows && !fixed; ++i)
          for (Eigen::Index j = t + 1; j < cols && !fixed; ++j)
            if (d(i, j) % d(t, t) != 0) {
              add_row(t, i, Int(1));
              fixed = true;
            }
        if (!fixed) break;
      }
    }
    finish();
  }

  void finish() {
    const Eigen::Index steps = std::min(d.rows(), d.cols());
    for (Eigen::Index t = 0; t < steps; ++t)
      if (d(t, t) < 0) negate_row(t);
  }
};

}  // namespace detail

template <typename Derived>
SnfResult smith_normal_form(const Eigen::MatrixBase<Derived>& a) {
  detail::SnfWorker w{IMat(a)};
  return {std::move(w.d), std::move(w.u), std::move(w.v)};
}

template <typename Derived>
std::vector<Int> elementary_divisors(const Eigen::MatrixBase<Derived>& a) {
  return smith_normal_form(a).divisors();
}

// ---------------------------------------------------------------------------
// Saturated kernel: basis (as rows) of {x in Z^n : a x = 0}, saturated in Z^n
// (the quotient Z^n / ker is torsion-free).  Rows of the result are a basis.

template <typename Derived>
IMat saturated_kernel(const Eigen::MatrixBase<Derived>& a) {
  detail::SnfWorker w{IMat(a)};
  const Eigen::Index cols = w.d.cols();
  const Eigen::Index steps = std::min(w.d.rows(), cols);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < steps; ++i)
    if (w.d(i, i) != 0) ++rank;
  // a * v has zero columns exactly at indices >= rank; those columns of v
  // form a basis of the kernel, and it is saturated since v is unimodular.
  IMat k(cols - rank, cols);
  for (Eigen::Index j = rank; j < cols; ++j) k.row(j - rank) = w.v.col(j).transpose();
  return k;
}

// Basis (as rows) of the row span of `a` over Z: the nonzero rows of u*a
// where u*a*v = d.  Rows of the result are independent and span the same
// Z-module as the rows of `a`.
template <typename Derived>
IMat row_span_basis(const Eigen::MatrixBase<Derived>& a_in) {
  IMat a = a_in;
  detail::SnfWorker w{a};
  Eigen::Index rank = 0;
  const Eigen::Index steps = std::min(w.d.rows(), w.d.cols());
  for (Eigen::Index i = 0; i < steps; ++i)
    if (w.d(i, i) != 0) ++rank;
  IMat ua = w.u * a;
  return ua.topRows(rank);
}

// ---------------------------------------------------------------------------
// Congruent diagonalization of a symmetric rational matrix:
// p^T * s * p = diag(diag).  Works for any symmetric input (indefinite,
// singular); zero diagonal pivots are repaired by adding a partner row/column.

struct CongruenceDiag {
  QMat p;
  QVec diag;
};

template <typename Derived>
CongruenceDiag congruent_diagonalize(const Eigen::MatrixBase<Derived>& s_in) {
  QMat s = s_in.template cast<Rat>();
  if (s.rows() != s.cols()) throw Error("congruent_diagonalize: matrix must be square");
  const Eigen::Index n = s.rows();
  if (!exact_eq(s, s.transpose().eval()))
    throw Error("congruent_diagonalize: matrix must be symmetric");
  QMat p = QMat::Identity(n, n);

  // Congruence by E: s <- E^T s E, p <- p E.
  auto add_pair = [&](Eigen::Index dst, Eigen::Index src, const Rat& f) {
    s.col(dst) += f * s.col(src);
    s.row(dst) += f * s.row(src);
    p.col(dst) += f * p.col(src);
  };
  auto swap_pair = [&](Eigen::Index i, Eigen::Index j) {
    s.col(i).swap(s.col(j));
    s.row(i).swap(s.row(j));
    p.col(i).swap(p.col(j));
  };

  for (Eigen::Index k = 0; k < n; ++k) {
    if (s(k, k) == 0) {
      Eigen::Index jd = -1, jo = -1;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (jd < 0 && s(j, j) != 0) jd = j;
        if (jo < 0 && s(k, j) != 0) jo = j;
      }
      if (jd >= 0) {
        swap_pair(k, jd);
      } else if (jo >= 0) {
        add_pair(k, jo, Rat(1));  // new s(k,k) = 2 s(k,jo) since s(jo,jo) = 0
      } else {
        continue;  // row/column already zero; diagonal entry stays 0
      }
    }
    for (Eigen::Index j = k + 1; j < n; ++j) {
      if (s(k, j) == 0) continue;
      add_pair(j, k, -s(k, j) / s(k, k));
    }
  }
  return {std::move(p), s.diagonal()};
}

// ---------------------------------------------------------------------------
// Rational linear solves.

// Solve a x = b exactly; returns std::nullopt when inconsistent.  When the
// system is underdetermined an arbitrary particular solution is returned.
inline std::optional<QVec> solve_rational(const QMat& a_in, const QVec& b_in) {
  QMat a = a_in;
  QVec b = b_in;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(r).swap(a.row(piv));
    std::swap(b(r), b(piv));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      a.row(i) -= f * a.row(r);
      b(i) -= f * b(r);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (b(i) != 0) return std::nullopt;
  QVec x = QVec::Zero(cols);
  for (Eigen::Index i = 0; i < r; ++i) x(pivot_col[i]) = b(i) / a(i, pivot_col[i]);
  return x;
}

inline QMat inverse_rational(const QMat& a) {
  if (a.rows() != a.cols()) throw Error("inverse_rational: matrix must be square");
  const Eigen::Index n = a.rows();
  QMat m = a, inv = QMat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error("inverse_rational: singular matrix");
    m.row(c).swap(m.row(piv));
    inv.row(c).swap(inv.row(piv));
    Rat d = m(c, c);
    m.row(c) /= d;
    inv.row(c) /= d;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rat f = m(i, c);
      m.row(i) -= f * m.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

}  // namespace typek

// Exact scalar types and small number-theory helpers shared by the library.
//
// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals (boost::multiprecision, expression templates off so the types
// behave as plain values inside Eigen matrices and std containers).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace typek {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// ---------------------------------------------------------------------------
// Errors

// Generic failure of a library operation (bad input, unmet precondition).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure of an internal cross-check that should hold by theory; raising this
// means either the input data or the implementation is inconsistent.
struct VerificationError : Error {
  explicit VerificationError(const std::string& msg) : Error(msg) {}
};

// Parse failure; `pos` is a 0-based offset into the input text.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : Error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

// ---------------------------------------------------------------------------
// Integer helpers

inline Int num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

inline Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw Error("make_rat: zero denominator");
  Rat r(n);
  r /= Rat(d);
  return r;
}

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int ipow(Int base, std::uint64_t e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Floor division (rounds toward -infinity, unlike C++ `/`).
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error("floor_div: division by zero");
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(num(x), den(x)); }

// Reduce x into [0, m) modulo m (m a positive rational).
inline Rat mod_positive(const Rat& x, const Rat& m) {
  Rat q = x / m;
  Rat f(floor_rat(q));
  return x - m * f;
}

inline Rat mod2(const Rat& x) { return mod_positive(x, Rat(2)); }
inline Rat mod1(const Rat& x) { return mod_positive(x, Rat(1)); }

// Floor of the integer square root; input must be >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw Error("isqrt: negative input");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// Exact rational square root; returns false if x is not a square.
inline bool rat_sqrt(const Rat& x, Rat* out) {
  if (x < 0) return false;
  Int rn, rd;
  if (!is_perfect_square(num(x), &rn) || !is_perfect_square(den(x), &rd)) return false;
  if (out) *out = make_rat(rn, rd);
  return true;
}

// Prime factorization by trial division: n >= 1, returns (p, multiplicity)
// in increasing p.  Intended for the small discriminants this library meets.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw Error("factorize: input must be >= 1");
  std::vector<std::pair<Int, int>> fs;
  auto strip = [&](const Int& p) {
    int m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (m) fs.emplace_back(p, m);
  };
  strip(2);
  for (Int p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

// Squarefree part, sign preserved: n = squarefree_part(n) * square.
inline Int squarefree_part(const Int& n) {
  if (n == 0) throw Error("squarefree_part: zero input");
  Int sf = n < 0 ? Int(-1) : Int(1);
  for (const auto& [p, m] : factorize(iabs(n)))
    if (m % 2) sf *= p;
  return sf;
}

// p-adic valuation of a nonzero integer.
inline int valuation(Int n, const Int& p) {
  if (n == 0) throw Error("valuation: zero input");
  if (p < 2) throw Error("valuation: p must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline int valuation(const Rat& x, const Int& p) {
  return valuation(num(x), p) - valuation(den(x), p);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// ---------------------------------------------------------------------------
// Gaussian rationals (exact complex numbers a + b*i with a, b rational)

struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  GaussRat conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator*(const Rat& c, const GaussRat& a) { return {c * a.re, c * a.im}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline std::string to_string(const GaussRat& z) {
  std::ostringstream os;
  os << z.re;
  if (z.im != 0) os << (z.im > 0 ? "+" : "") << z.im << "i";
  return os.str();
}

// ---------------------------------------------------------------------------
// Small Eigen conveniences

inline QMat to_rational(const IMat& a) { return a.cast<Rat>(); }

template <typename Derived1, typename Derived2>
bool exact_eq(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace typek

#include "typek/cyclotomic.hpp"

#include "typek/exact_linalg.hpp"

#include <sstream>

namespace typek {

namespace {

void check_conductor(int n) {
  if (n != 8 && n != 12) throw Error("Cyc: conductor must be 8 or 12");
}

}  // namespace

Cyc Cyc::zero(int conductor) {
  check_conductor(conductor);
  Cyc c;
  c.n_ = conductor;
  c.strip();
  return c;
}

Cyc Cyc::zeta_power(int conductor, long k) {
  check_conductor(conductor);
  long r = k % conductor;
  if (r < 0) r += conductor;
  Cyc z;
  z.n_ = conductor;
  z.c_[1] = Rat(1);
  Cyc acc = one();
  for (long i = 0; i < r; ++i) acc = acc * z;
  if (r == 0) acc.n_ = 0;
  return acc;
}

bool Cyc::is_zero() const {
  for (const Rat& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational(Rat* out) const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (out) *out = c_[0];
  return true;
}

void Cyc::strip() {
  if (is_rational()) n_ = 0;
}

void Cyc::promote(Cyc& a, Cyc& b) {
  if (a.n_ == b.n_) return;
  if (a.n_ == 0)
    a.n_ = b.n_;
  else if (b.n_ == 0)
    b.n_ = a.n_;
  else
    throw Error("Cyc: cannot mix conductors " + std::to_string(a.n_) + " and " +
                std::to_string(b.n_));
}

Cyc operator+(const Cyc& a_in, const Cyc& b_in) {
  Cyc a = a_in, b = b_in;
  Cyc::promote(a, b);
  Cyc s;
  s.n_ = a.n_;
  for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  s.strip();
  return s;
}

Cyc operator-(const Cyc& a) {
  Cyc s = a;
  for (Rat& c : s.c_) c = -c;
  return s;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a_in, const Cyc& b_in) {
  Cyc a = a_in, b = b_in;
  Cyc::promote(a, b);
  std::array<Rat, 7> prod{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyc s;
  s.n_ = a.n_;
  if (a.n_ == 8) {
    // zeta^4 = -1.
    s.c_[0] = prod[0] - prod[4];
    s.c_[1] = prod[1] - prod[5];
    s.c_[2] = prod[2] - prod[6];
    s.c_[3] = prod[3];
  } else if (a.n_ == 12) {
    // zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta, zeta^6 = -1.
    s.c_[0] = prod[0] - prod[4] - prod[6];
    s.c_[1] = prod[1] - prod[5];
    s.c_[2] = prod[2] + prod[4];
    s.c_[3] = prod[3] + prod[5];
  } else {
    s.c_[0] = prod[0];  // two plain rationals
  }
  s.strip();
  return s;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.n_ != b.n_) {
    // Conductor 0 never stores higher coefficients, so distinct nonzero
    // conductors with equal values can only both be rational -- impossible
    // under the strip invariant.  A rational vs field element compares by
    // the rational part.
    if (a.n_ != 0 && b.n_ != 0) return false;
  }
  return a.c_ == b.c_;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw Error("Cyc::inverse: zero element");
  Rat r;
  if (is_rational(&r)) return Cyc(Rat(1) / r);
  // Multiplication by *this is Q-linear; invert it on the basis.
  QMat m(4, 4);
  for (int j = 0; j < 4; ++j) {
    Cyc zj = zeta_power(n_, j);
    Cyc col = *this * zj;
    for (int i = 0; i < 4; ++i) m(i, j) = col.c_[static_cast<std::size_t>(i)];
  }
  QVec e0 = QVec::Zero(4);
  e0(0) = Rat(1);
  std::optional<QVec> sol = solve_rational(m, e0);
  if (!sol) throw Error("Cyc::inverse: multiplication matrix is singular");
  Cyc out;
  out.n_ = n_;
  for (int i = 0; i < 4; ++i) out.c_[static_cast<std::size_t>(i)] = (*sol)(i);
  out.strip();
  Cyc check = *this * out;
  if (!(check == one())) throw Error("Cyc::inverse: verification failed");
  return out;
}

std::string Cyc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "zeta";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CycMat2

CycMat2 CycMat2::identity() {
  CycMat2 a;
  a.m[0][0] = Cyc::one();
  a.m[1][1] = Cyc::one();
  return a;
}

CycMat2 CycMat2::diagonal(const Cyc& a, const Cyc& d) {
  CycMat2 out;
  out.m[0][0] = a;
  out.m[1][1] = d;
  return out;
}

CycMat2 CycMat2::anti_diagonal(const Cyc& b, const Cyc& c) {
  CycMat2 out;
  out.m[0][1] = b;
  out.m[1][0] = c;
  return out;
}

CycMat2 operator*(const CycMat2& a, const CycMat2& b) {
  CycMat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return out;
}

bool operator==(const CycMat2& a, const CycMat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(a.m[i][j] == b.m[i][j])) return false;
  return true;
}

CycMat2 CycMat2::adjugate() const {
  CycMat2 out;
  out.m[0][0] = m[1][1];
  out.m[0][1] = -m[0][1];
  out.m[1][0] = -m[1][0];
  out.m[1][1] = m[0][0];
  return out;
}

Cyc CycMat2::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

bool CycMat2::is_scalar(Cyc* lambda) const {
  if (!m[0][1].is_zero() || !m[1][0].is_zero()) return false;
  if (!(m[0][0] == m[1][1])) return false;
  if (m[0][0].is_zero()) return false;
  if (lambda) *lambda = m[0][0];
  return true;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly s;
  for (std::size_t i = 0; i < s.coeff.size(); ++i) s.coeff[i] = a.coeff[i] + b.coeff[i];
  return s;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly s;
  for (std::size_t i = 0; i < s.coeff.size(); ++i) s.coeff[i] = a.coeff[i] - b.coeff[i];
  return s;
}

BiPoly operator*(const Cyc& c, const BiPoly& p) {
  BiPoly s;
  for (std::size_t i = 0; i < s.coeff.size(); ++i) s.coeff[i] = c * p.coeff[i];
  return s;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    if (!(a.coeff[i] == b.coeff[i])) return false;
  return true;
}

bool BiPoly::is_zero() const {
  for (const Cyc& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int idx = 24; idx >= 0; --idx) {
    const Cyc& c = coeff[static_cast<std::size_t>(idx)];
    if (c.is_zero()) continue;
    int i = idx / 5, j = idx % 5;
    if (!first) os << " + ";
    first = false;
    Rat r;
    bool plain_one = c.is_rational(&r) && r == 1;
    if (!plain_one) os << "(" << c.to_string() << ")*";
    bool star = false;
    auto put = [&](const char* v, int e) {
      if (e == 0) return;
      if (star) os << "*";
      star = true;
      os << v;
      if (e > 1) os << "^" << e;
    };
    put("x", i);
    put("y", 4 - i);
    put("z", j);
    put("w", 4 - j);
  }
  return os.str();
}

BiPoly monomial_44(int i, int j) {
  if (i < 0 || i > 4 || j < 0 || j > 4) throw Error("monomial_44: exponent out of range");
  BiPoly p;
  p.coeff[static_cast<std::size_t>(5 * i + j)] = Cyc::one();
  return p;
}

// ---------------------------------------------------------------------------
// Action on bidegree (4, 4) polynomials

namespace {

// Binary forms of degree d as d+1 coefficients of x^s y^(d-s).
using Form = std::vector<Cyc>;

Form times_linear(const Form& f, const Cyc& alpha, const Cyc& beta) {
  Form out(f.size() + 1);
  for (std::size_t s = 0; s < out.size(); ++s) {
    Cyc acc;
    if (s > 0) acc = acc + alpha * f[s - 1];
    if (s < f.size()) acc = acc + beta * f[s];
    out[s] = acc;
  }
  return out;
}

// Images of x^i y^(4-i) under the substitution (x, y) -> a (x, y)^T.
std::array<Form, 5> factor_images(const CycMat2& a) {
  std::array<Form, 5> out;
  for (int i = 0; i <= 4; ++i) {
    Form f{Cyc::one()};
    for (int k = 0; k < i; ++k) f = times_linear(f, a.m[0][0], a.m[0][1]);
    for (int k = 0; k < 4 - i; ++k) f = times_linear(f, a.m[1][0], a.m[1][1]);
    out[static_cast<std::size_t>(i)] = std::move(f);
  }
  return out;
}

}  // namespace

BiPoly act(const ProjPair& g, const BiPoly& p) {
  std::array<Form, 5> xy = factor_images(g.first.adjugate());
  std::array<Form, 5> zw = factor_images(g.second.adjugate());
  BiPoly out;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      const Cyc& c = p.coeff[static_cast<std::size_t>(5 * i + j)];
      if (c.is_zero()) continue;
      const Form& fx = xy[static_cast<std::size_t>(i)];
      const Form& fz = zw[static_cast<std::size_t>(j)];
      for (int s = 0; s <= 4; ++s) {
        if (fx[static_cast<std::size_t>(s)].is_zero()) continue;
        Cyc cs = c * fx[static_cast<std::size_t>(s)];
        for (int t = 0; t <= 4; ++t) {
          if (fz[static_cast<std::size_t>(t)].is_zero()) continue;
          std::size_t idx = static_cast<std::size_t>(5 * s + t);
          out.coeff[idx] = out.coeff[idx] + cs * fz[static_cast<std::size_t>(t)];
        }
      }
    }
  return out;
}

std::vector<std::vector<Cyc>> action_matrix(const ProjPair& g) {
  std::vector<std::vector<Cyc>> m(25, std::vector<Cyc>(25));
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      BiPoly img = act(g, monomial_44(i, j));
      for (int r = 0; r < 25; ++r)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(5 * i + j)] =
            img.coeff[static_cast<std::size_t>(r)];
    }
  return m;
}

int rank_cyc(std::vector<std::vector<Cyc>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw Error("rank_cyc: ragged matrix");
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Cyc inv = rows[pivot_row][col].inverse();
    for (std::size_t c = col; c < ncols; ++c)
      rows[pivot_row][c] = inv * rows[pivot_row][c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      Cyc f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = rows[r][c] - f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

int invariant_dimension(const std::vector<ProjPair>& generators) {
  if (generators.empty()) throw Error("invariant_dimension: no generators");
  std::vector<std::vector<Cyc>> rows;
  for (const ProjPair& g : generators) {
    std::vector<std::vector<Cyc>> m = action_matrix(g);
    for (int r = 0; r < 25; ++r) {
      std::vector<Cyc> row = m[static_cast<std::size_t>(r)];
      row[static_cast<std::size_t>(r)] = row[static_cast<std::size_t>(r)] - Cyc::one();
      rows.push_back(std::move(row));
    }
  }
  return 25 - rank_cyc(std::move(rows));
}

bool is_invariant(const std::vector<ProjPair>& generators, const BiPoly& p) {
  for (const ProjPair& g : generators)
    if (!(act(g, p) == p)) return false;
  return true;
}

bool independent(const std::vector<BiPoly>& polys) {
  std::vector<std::vector<Cyc>> rows;
  rows.reserve(polys.size());
  for (const BiPoly& p : polys)
    rows.emplace_back(p.coeff.begin(), p.coeff.end());
  return rank_cyc(std::move(rows)) == static_cast<int>(polys.size());
}

// ---------------------------------------------------------------------------
// Relations and models

namespace {

CycMat2 word_product(const ProjModel& model, const std::vector<int>& word, bool second) {
  CycMat2 acc = CycMat2::identity();
  for (int idx : word) {
    if (idx < 0 || idx >= static_cast<int>(model.generators.size()))
      throw Error("relation: generator index out of range");
    const ProjPair& g = model.generators[static_cast<std::size_t>(idx)];
    acc = acc * (second ? g.second : g.first);
  }
  return acc;
}

bool proportional(const CycMat2& a, const CycMat2& b) {
  // a = lambda * b for some nonzero scalar lambda.
  Cyc lambda;
  bool found = false;
  for (int i = 0; i < 2 && !found; ++i)
    for (int j = 0; j < 2 && !found; ++j)
      if (!b.m[i][j].is_zero()) {
        lambda = a.m[i][j] * b.m[i][j].inverse();
        found = true;
      }
  if (!found || lambda.is_zero()) return false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(a.m[i][j] == lambda * b.m[i][j])) return false;
  return true;
}

}  // namespace

bool relation_holds(const ProjModel& model, const ProjRelation& relation) {
  for (bool second : {false, true}) {
    CycMat2 lhs = word_product(model, relation.lhs, second);
    CycMat2 rhs = word_product(model, relation.rhs, second);
    if (!proportional(lhs, rhs)) return false;
  }
  return true;
}

ProjModel model_d12() {
  ProjModel m;
  m.name = "D12";
  m.conductor = 12;
  auto z = [](long k) { return Cyc::zeta_power(12, k); };
  ProjPair a{CycMat2::diagonal(z(1), z(11)), CycMat2::diagonal(z(2), z(10))};
  ProjPair b{CycMat2::anti_diagonal(Cyc::one(), Cyc::one()),
             CycMat2::anti_diagonal(Cyc::one(), Cyc::one())};
  m.generator_names = {"a", "b"};
  m.generators = {a, b};
  m.relations = {{"a^6 = 1", {0, 0, 0, 0, 0, 0}, {}},
                 {"b^2 = 1", {1, 1}, {}},
                 {"baba = 1", {1, 0, 1, 0}, {}}};
  m.expected_basis = {monomial_44(4, 4) + monomial_44(0, 0),
                      monomial_44(4, 1) + monomial_44(0, 3), monomial_44(2, 2)};
  return m;
}

ProjModel model_d8c2() {
  ProjModel m;
  m.name = "D8xC2";
  m.conductor = 8;
  auto z = [](long k) { return Cyc::zeta_power(8, k); };
  ProjPair a{CycMat2::diagonal(z(1), z(7)), CycMat2::diagonal(z(1), z(7))};
  ProjPair b{CycMat2::anti_diagonal(Cyc::one(), Cyc::one()),
             CycMat2::anti_diagonal(Cyc::one(), Cyc::one())};
  ProjPair c{CycMat2::identity(), CycMat2::diagonal(z(2), z(6))};
  m.generator_names = {"a", "b", "c"};
  m.generators = {a, b, c};
  m.relations = {{"a^4 = 1", {0, 0, 0, 0}, {}}, {"b^2 = 1", {1, 1}, {}},
                 {"baba = 1", {1, 0, 1, 0}, {}}, {"ac = ca", {0, 2}, {2, 0}},
                 {"bc = cb", {1, 2}, {2, 1}}};
  m.expected_basis = {monomial_44(4, 4) + monomial_44(0, 0),
                      monomial_44(4, 0) + monomial_44(0, 4), monomial_44(2, 2)};
  return m;
}

ProjModel model_d8() {
  ProjModel m;
  m.name = "D8";
  m.conductor = 8;
  auto z = [](long k) { return Cyc::zeta_power(8, k); };
  ProjPair a{CycMat2::diagonal(z(1), z(7)), CycMat2::diagonal(z(2), z(6))};
  ProjPair b{CycMat2::anti_diagonal(Cyc::one(), Cyc::one()),
             CycMat2::anti_diagonal(Cyc::one(), Cyc::one())};
  m.generator_names = {"a", "b"};
  m.generators = {a, b};
  m.relations = {{"a^4 = 1", {0, 0, 0, 0}, {}},
                 {"b^2 = 1", {1, 1}, {}},
                 {"baba = 1", {1, 0, 1, 0}, {}}};
  m.expected_basis = {monomial_44(4, 3) + monomial_44(0, 1),
                      monomial_44(4, 1) + monomial_44(0, 3),
                      monomial_44(2, 4) + monomial_44(2, 0), monomial_44(2, 2)};
  return m;
}

std::vector<ProjModel> all_proj_models() { return {model_d12(), model_d8c2(), model_d8()}; }

}  // namespace typek

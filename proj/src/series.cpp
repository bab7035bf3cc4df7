#include "typek/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace typek {

namespace {

int total_degree(const MultiSeries::Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

}  // namespace

MultiSeries::MultiSeries(int nvars, int trunc) : nvars_(nvars), trunc_(trunc) {
  if (nvars < 1) throw Error("MultiSeries: nvars must be >= 1");
  if (trunc < 0) throw Error("MultiSeries: trunc must be >= 0");
}

MultiSeries MultiSeries::constant(int nvars, int trunc, const Rat& c) {
  MultiSeries s(nvars, trunc);
  if (c != 0) s.terms_[Exponent(static_cast<std::size_t>(nvars), 0)] = c;
  return s;
}

MultiSeries MultiSeries::variable(int nvars, int trunc, int i) {
  return monomial(nvars, trunc, [&] {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    if (i < 0 || i >= nvars) throw Error("MultiSeries::variable: index out of range");
    e[static_cast<std::size_t>(i)] = 1;
    return e;
  }(), Rat(1));
}

MultiSeries MultiSeries::monomial(int nvars, int trunc, Exponent e, const Rat& c) {
  MultiSeries s(nvars, trunc);
  if (static_cast<int>(e.size()) != nvars)
    throw Error("MultiSeries::monomial: exponent arity mismatch");
  for (int x : e)
    if (x < 0) throw Error("MultiSeries::monomial: negative exponent");
  if (total_degree(e) > trunc) throw Error("MultiSeries::monomial: exponent beyond trunc");
  if (c != 0) s.terms_[std::move(e)] = c;
  return s;
}

int MultiSeries::valuation() const {
  int v = trunc_ + 1;
  for (const auto& [e, c] : terms_) v = std::min(v, total_degree(e));
  return v;
}

Rat MultiSeries::coeff(const Exponent& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw Error("MultiSeries::coeff: arity mismatch");
  if (total_degree(e) > trunc_)
    throw Error("MultiSeries::coeff: exponent beyond the truncation bound");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiSeries::set_coeff(const Exponent& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error("MultiSeries::set_coeff: arity mismatch");
  if (total_degree(e) > trunc_) throw Error("MultiSeries::set_coeff: exponent beyond trunc");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

MultiSeries MultiSeries::truncated(int t) const {
  if (t > trunc_) throw Error("MultiSeries::truncated: cannot raise the truncation bound");
  MultiSeries s(nvars_, t);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= t) s.terms_[e] = c;
  return s;
}

void MultiSeries::check_compatible(const MultiSeries& other) const {
  if (nvars_ != other.nvars_) throw Error("MultiSeries: variable count mismatch");
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  MultiSeries s(a.nvars_, std::min(a.trunc_, b.trunc_));
  for (const auto& [e, c] : a.terms_)
    if (total_degree(e) <= s.trunc_) s.terms_[e] = c;
  for (const auto& [e, c] : b.terms_) {
    if (total_degree(e) > s.trunc_) continue;
    auto [it, fresh] = s.terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) s.terms_.erase(it);
    }
  }
  return s;
}

MultiSeries operator-(const MultiSeries& a) {
  MultiSeries s(a.nvars_, a.trunc_);
  for (const auto& [e, c] : a.terms_) s.terms_[e] = -c;
  return s;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  // Valuation-aware truncation: a correct to Ta plus a factor of valuation vb
  // yields products correct to Ta + vb.
  int t = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
  MultiSeries s(a.nvars_, std::max(0, t));
  if (a.terms_.empty() || b.terms_.empty()) return s;
  MultiSeries::Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > s.trunc_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = s.terms_.emplace(e, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) s.terms_.erase(it);
      }
    }
  }
  return s;
}

MultiSeries operator*(const Rat& c, const MultiSeries& a) {
  MultiSeries s(a.nvars_, a.trunc_);
  if (c == 0) return s;
  for (const auto& [e, coeff] : a.terms_) s.terms_[e] = c * coeff;
  return s;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  return a.nvars_ == b.nvars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

MultiSeries MultiSeries::pow(unsigned e) const {
  MultiSeries acc = constant(nvars_, trunc_, Rat(1));
  MultiSeries base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

MultiSeries MultiSeries::inverse() const {
  Exponent zero(static_cast<std::size_t>(nvars_), 0);
  auto it = terms_.find(zero);
  if (it == terms_.end()) throw Error("MultiSeries::inverse: constant term is zero");
  Rat c0 = it->second;
  // f = c0 (1 + g)  =>  1/f = (1/c0) sum (-g)^k.
  MultiSeries g = make_rat(Int(1), Int(1)) * *this;  // copy
  g.terms_.erase(zero);
  g = make_rat(Int(-1), Int(1)) * g;
  Rat inv_c0 = Rat(1) / c0;
  for (auto& [e, c] : g.terms_) c *= inv_c0;
  MultiSeries acc = constant(nvars_, trunc_, Rat(1));
  MultiSeries p = constant(nvars_, trunc_, Rat(1));
  int gv = g.valuation();
  if (gv < 1) throw Error("MultiSeries::inverse: internal valuation error");
  for (int k = 1; k * gv <= trunc_; ++k) {
    p = (p * g).truncated(trunc_);
    acc = acc + p;
  }
  for (auto& [e, c] : acc.terms_) c *= inv_c0;
  return acc;
}

MultiSeries MultiSeries::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw Error("MultiSeries::derivative: index out of range");
  // d/dz_i maps degree d to d-1; information at trunc_ gives trunc_ - 1.
  MultiSeries s(nvars_, trunc_ > 0 ? trunc_ - 1 : 0);
  for (const auto& [e, c] : terms_) {
    std::size_t ix = static_cast<std::size_t>(i);
    if (e[ix] == 0) continue;
    Exponent d = e;
    d[ix] -= 1;
    if (total_degree(d) > s.trunc_) continue;
    s.terms_[d] = c * Rat(e[ix]);
  }
  return s;
}

MultiSeries MultiSeries::theta(int i) const {
  if (i < 0 || i >= nvars_) throw Error("MultiSeries::theta: index out of range");
  MultiSeries s(nvars_, trunc_);
  for (const auto& [e, c] : terms_) {
    std::size_t ix = static_cast<std::size_t>(i);
    if (e[ix] == 0) continue;
    s.terms_[e] = c * Rat(e[ix]);
  }
  return s;
}

MultiSeries MultiSeries::substitute(const std::vector<MultiSeries>& args) const {
  if (static_cast<int>(args.size()) != nvars_)
    throw Error("MultiSeries::substitute: expected one series per variable");
  int out_nvars = args.front().nvars();
  int out_trunc = trunc_;
  for (const MultiSeries& a : args) {
    if (a.nvars() != out_nvars) throw Error("MultiSeries::substitute: argument arity mismatch");
    if (a.valuation() < 1)
      throw Error("MultiSeries::substitute: arguments must have positive valuation");
    out_trunc = std::min(out_trunc, a.trunc());
  }
  // Cache powers of each argument.
  std::vector<std::vector<MultiSeries>> powers(args.size());
  auto arg_power = [&](std::size_t i, int e) -> const MultiSeries& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiSeries::constant(out_nvars, out_trunc, Rat(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back((cache.back() * args[i]).truncated(out_trunc));
    return cache[static_cast<std::size_t>(e)];
  };
  MultiSeries acc(out_nvars, out_trunc);
  for (const auto& [e, c] : terms_) {
    MultiSeries term = MultiSeries::constant(out_nvars, out_trunc, c);
    for (std::size_t i = 0; i < args.size(); ++i)
      if (e[i] > 0) term = (term * arg_power(i, e[i])).truncated(out_trunc);
    acc = acc + term;
  }
  return acc;
}

MultiSeries MultiSeries::divide_monomial(const Exponent& d) const {
  if (static_cast<int>(d.size()) != nvars_)
    throw Error("MultiSeries::divide_monomial: arity mismatch");
  int dd = total_degree(d);
  MultiSeries s(nvars_, trunc_ - dd);
  if (s.trunc_ < 0) throw Error("MultiSeries::divide_monomial: truncation exhausted");
  for (const auto& [e, c] : terms_) {
    Exponent q = e;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] -= d[i];
      if (q[i] < 0)
        throw Error("MultiSeries::divide_monomial: term not divisible by the monomial");
    }
    s.terms_[q] = c;
  }
  return s;
}

MultiSeries MultiSeries::swap_vars(int i, int j) const {
  if (i < 0 || i >= nvars_ || j < 0 || j >= nvars_)
    throw Error("MultiSeries::swap_vars: index out of range");
  MultiSeries s(nvars_, trunc_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
    s.terms_[std::move(f)] = c;
  }
  return s;
}

std::string MultiSeries::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw Error("MultiSeries::to_string: need one name per variable");
  if (terms_.empty()) return "0";
  // Graded lexicographic order for a stable, readable rendering.
  std::vector<std::pair<Exponent, Rat>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rat a = c < 0 ? Rat(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool has_var = total_degree(e) > 0;
    if (!has_var || a != 1) os << a;
    bool star = !has_var || a != 1 ? true : false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (star ? "*" : "");
      star = true;
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiSeries exp_series(const MultiSeries& f) {
  MultiSeries::Exponent zero(static_cast<std::size_t>(f.nvars()), 0);
  if (!f.is_zero() && f.terms().count(zero))
    throw Error("exp_series: constant term must be zero");
  MultiSeries acc = MultiSeries::constant(f.nvars(), f.trunc(), Rat(1));
  MultiSeries p = acc;
  int v = std::max(1, f.valuation());
  for (int k = 1; k * v <= f.trunc(); ++k) {
    p = make_rat(Int(1), Int(k)) * (p * f).truncated(f.trunc());
    acc = acc + p;
  }
  return acc;
}

MultiSeries log_series(const MultiSeries& f) {
  MultiSeries::Exponent zero(static_cast<std::size_t>(f.nvars()), 0);
  auto it = f.terms().find(zero);
  if (it == f.terms().end() || it->second != 1)
    throw Error("log_series: constant term must be 1");
  MultiSeries g = f - MultiSeries::constant(f.nvars(), f.trunc(), Rat(1));
  MultiSeries acc(f.nvars(), f.trunc());
  MultiSeries p = MultiSeries::constant(f.nvars(), f.trunc(), Rat(1));
  int v = std::max(1, g.valuation());
  for (int k = 1; k * v <= f.trunc(); ++k) {
    p = (p * g).truncated(f.trunc());
    Rat c = make_rat(Int(k % 2 ? 1 : -1), Int(k));
    acc = acc + c * p;
  }
  return acc;
}

MultiSeries sqrt_series(const MultiSeries& f) {
  MultiSeries::Exponent zero(static_cast<std::size_t>(f.nvars()), 0);
  auto it = f.terms().find(zero);
  if (it == f.terms().end()) throw Error("sqrt_series: constant term must be a nonzero square");
  Rat root;
  if (!rat_sqrt(it->second, &root))
    throw Error("sqrt_series: constant term is not a rational square");
  // f = c0 (1 + g): sqrt = sqrt(c0) * sum binom(1/2, k) g^k.
  MultiSeries g = (Rat(1) / it->second) * f;
  g = g - MultiSeries::constant(f.nvars(), f.trunc(), Rat(1));
  MultiSeries acc = MultiSeries::constant(f.nvars(), f.trunc(), Rat(1));
  MultiSeries p = acc;
  Rat binom(1);
  int v = std::max(1, g.valuation());
  for (int k = 1; k * v <= f.trunc(); ++k) {
    p = (p * g).truncated(f.trunc());
    // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k.
    binom *= (make_rat(Int(1), Int(2)) - Rat(k - 1)) / Rat(k);
    acc = acc + binom * p;
  }
  return root * acc;
}

std::vector<MultiSeries> revert_map(const std::vector<MultiSeries>& units) {
  if (units.empty()) throw Error("revert_map: no components");
  const int n = units.front().nvars();
  if (static_cast<int>(units.size()) != n)
    throw Error("revert_map: need exactly one unit per variable");
  const int t = units.front().trunc();
  MultiSeries::Exponent zero(static_cast<std::size_t>(n), 0);
  for (const MultiSeries& u : units) {
    if (u.nvars() != n || u.trunc() != t) throw Error("revert_map: inconsistent components");
    if (u.coeff(zero) != 1) throw Error("revert_map: units must have constant term 1");
  }
  // z_i^(0) = q_i; z_i^(k+1) = q_i / units_i(z^(k)).  Each round fixes at
  // least one further order, so trunc rounds are enough.
  std::vector<MultiSeries> z;
  for (int i = 0; i < n; ++i) z.push_back(MultiSeries::variable(n, t, i));
  for (int round = 0; round < t; ++round) {
    std::vector<MultiSeries> next;
    next.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      MultiSeries q_i = MultiSeries::variable(n, t, i);
      next.push_back(q_i * units[static_cast<std::size_t>(i)].substitute(z).inverse());
    }
    z = std::move(next);
  }
  // Exact round-trip check.
  for (int i = 0; i < n; ++i) {
    MultiSeries recomposed = z[static_cast<std::size_t>(i)] *
                             units[static_cast<std::size_t>(i)].substitute(z);
    if (!(recomposed == MultiSeries::variable(n, t, i)))
      throw VerificationError("revert_map: fixed point did not close after trunc rounds");
  }
  return z;
}

// ---------------------------------------------------------------------------
// PuiseuxSeries

PuiseuxSeries::PuiseuxSeries(Rat trunc) : trunc_(std::move(trunc)) {
  if (trunc_ < 0) throw Error("PuiseuxSeries: trunc must be >= 0");
}

PuiseuxSeries PuiseuxSeries::monomial(const Rat& exponent, const Rat& c, const Rat& trunc) {
  PuiseuxSeries s(trunc);
  if (exponent > trunc) throw Error("PuiseuxSeries::monomial: exponent beyond trunc");
  if (c != 0) {
    s.den_ = den(exponent);
    s.terms_[num(exponent)] = c;
  }
  return s;
}

std::vector<std::pair<Rat, Rat>> PuiseuxSeries::entries() const {
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(make_rat(k, den_), c);
  return out;
}

Rat PuiseuxSeries::coeff(const Rat& exponent) const {
  if (exponent > trunc_) throw Error("PuiseuxSeries::coeff: exponent beyond the truncation bound");
  Rat scaled = exponent * Rat(den_);
  if (den(scaled) != 1) return Rat(0);  // off the grid
  auto it = terms_.find(num(scaled));
  return it == terms_.end() ? Rat(0) : it->second;
}

void PuiseuxSeries::add_term(const Rat& exponent, const Rat& c) {
  if (exponent > trunc_) throw Error("PuiseuxSeries::add_term: exponent beyond trunc");
  if (c == 0) return;
  Int d = lcm(den_, den(exponent));
  if (d != den_) {
    Int f = d / den_;
    std::map<Int, Rat> rescaled;
    for (const auto& [k, v] : terms_) rescaled[k * f] = v;
    terms_ = std::move(rescaled);
    den_ = d;
  }
  Int key = num(exponent) * (den_ / den(exponent));
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  normalize();
}

Rat PuiseuxSeries::valuation() const {
  if (terms_.empty()) return trunc_ + 1;
  return make_rat(terms_.begin()->first, den_);
}

void PuiseuxSeries::normalize() {
  if (terms_.empty()) {
    den_ = 1;
    return;
  }
  Int g = den_;
  for (const auto& [k, c] : terms_) {
    g = gcd(g, iabs(k));
    if (g == 1) return;
  }
  std::map<Int, Rat> reduced;
  for (const auto& [k, c] : terms_) reduced[k / g] = c;
  terms_ = std::move(reduced);
  den_ /= g;
}

void PuiseuxSeries::align(PuiseuxSeries& a, PuiseuxSeries& b) {
  Int d = lcm(a.den_, b.den_);
  auto rescale = [&](PuiseuxSeries& s) {
    if (s.den_ == d) return;
    Int f = d / s.den_;
    std::map<Int, Rat> out;
    for (const auto& [k, c] : s.terms_) out[k * f] = c;
    s.terms_ = std::move(out);
    s.den_ = d;
  };
  rescale(a);
  rescale(b);
}

PuiseuxSeries operator+(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in, b = b_in;
  PuiseuxSeries::align(a, b);
  PuiseuxSeries s(std::min(a.trunc_, b.trunc_));
  s.den_ = a.den_;
  Rat bound = s.trunc_ * Rat(s.den_);
  for (const auto& [k, c] : a.terms_)
    if (Rat(k) <= bound) s.terms_[k] = c;
  for (const auto& [k, c] : b.terms_) {
    if (Rat(k) > bound) continue;
    auto [it, fresh] = s.terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) s.terms_.erase(it);
    }
  }
  s.normalize();
  return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a + Rat(-1) * b;
}

PuiseuxSeries operator*(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in, b = b_in;
  PuiseuxSeries::align(a, b);
  Rat t = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
  PuiseuxSeries s(std::max(Rat(0), t));
  s.den_ = a.den_;
  Rat bound = s.trunc_ * Rat(s.den_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Int k = ka + kb;
      if (Rat(k) > bound) continue;
      auto [it, fresh] = s.terms_.emplace(k, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) s.terms_.erase(it);
      }
    }
  s.normalize();
  return s;
}

PuiseuxSeries operator*(const Rat& c, const PuiseuxSeries& a) {
  PuiseuxSeries s(a.trunc_);
  if (c == 0) return s;
  s.den_ = a.den_;
  s.terms_ = a.terms_;
  for (auto& [k, v] : s.terms_) v *= c;
  return s;
}

bool operator==(const PuiseuxSeries& a_in, const PuiseuxSeries& b_in) {
  PuiseuxSeries a = a_in, b = b_in;
  PuiseuxSeries::align(a, b);
  return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

PuiseuxSeries PuiseuxSeries::pow(unsigned e) const {
  PuiseuxSeries acc = monomial(Rat(0), Rat(1), trunc_);
  PuiseuxSeries base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
  if (terms_.empty()) throw Error("PuiseuxSeries::inverse: zero series");
  Rat v = valuation();
  PuiseuxSeries u = shift(-v);  // unit with u(0) != 0, trunc_ - v
  // Dense recurrence on the key grid of u.
  Rat c0 = u.terms_.at(Int(0));
  PuiseuxSeries r(u.trunc_);
  r.den_ = u.den_;
  Int kmax = floor_rat(u.trunc_ * Rat(u.den_));
  std::map<Int, Rat> inv;
  inv[Int(0)] = Rat(1) / c0;
  for (Int k = 1; k <= kmax; ++k) {
    Rat acc(0);
    for (const auto& [j, cj] : u.terms_) {
      if (j == 0 || j > k) continue;
      auto it = inv.find(Int(k - j));
      if (it != inv.end()) acc += cj * it->second;
    }
    if (acc != 0) inv[k] = -acc / c0;
  }
  r.terms_ = std::move(inv);
  r.normalize();
  return r.shift(-v);
}

PuiseuxSeries PuiseuxSeries::shift(const Rat& e) const {
  PuiseuxSeries s(trunc_ + e < 0 ? Rat(0) : Rat(trunc_ + e));
  Int d = lcm(den_, den(e));
  s.den_ = d;
  Int offset = num(e) * (d / den(e));
  Int f = d / den_;
  for (const auto& [k, c] : terms_) s.terms_[k * f + offset] = c;
  s.trunc_ = trunc_ + e;  // may be negative only when the series is empty
  if (s.trunc_ < 0 && !s.terms_.empty())
    throw Error("PuiseuxSeries::shift: negative truncation with terms present");
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::scale_exponent(const Rat& f) const {
  if (f <= 0) throw Error("PuiseuxSeries::scale_exponent: factor must be positive");
  PuiseuxSeries s(trunc_ * f);
  // exponent k/den -> k*num(f) / (den*den(f)).
  s.den_ = den_ * den(f);
  for (const auto& [k, c] : terms_) s.terms_[k * num(f)] = c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rat& t) const {
  if (t > trunc_) throw Error("PuiseuxSeries::truncated: cannot raise the truncation bound");
  PuiseuxSeries s(t);
  s.den_ = den_;
  Rat bound = t * Rat(den_);
  for (const auto& [k, c] : terms_)
    if (Rat(k) <= bound) s.terms_[k] = c;
  s.normalize();
  return s;
}

MultiSeries PuiseuxSeries::to_integer_series() const {
  PuiseuxSeries n = *this;
  n.normalize();
  if (n.den_ != 1)
    throw Error("PuiseuxSeries::to_integer_series: exponents are not integral");
  int t = static_cast<int>(floor_rat(n.trunc_));
  MultiSeries out(1, std::max(0, t));
  for (const auto& [k, c] : n.terms_) {
    if (k < 0) throw Error("PuiseuxSeries::to_integer_series: negative exponent");
    if (k > t) continue;
    out.set_coeff({static_cast<int>(k)}, c);
  }
  return out;
}

std::string PuiseuxSeries::to_string(const std::string& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat a = c < 0 ? Rat(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << name;
    Rat ex = make_rat(k, den_);
    if (den(ex) == 1) {
      if (num(ex) != 1) os << "^" << num(ex);
    } else {
      os << "^(" << num(ex) << "/" << den(ex) << ")";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Theta constants and eta

PuiseuxSeries theta2(const Rat& trunc) {
  PuiseuxSeries s(trunc);
  // exponents (n + 1/2)^2 / 2 = (2n+1)^2 / 8 <= trunc
  for (Int n = 0;; ++n) {
    Rat e = make_rat((2 * n + 1) * (2 * n + 1), Int(8));
    if (e > trunc) break;
    s.add_term(e, Rat(2));  // n and -n-1 coincide
  }
  return s;
}

PuiseuxSeries theta3(const Rat& trunc) {
  PuiseuxSeries s(trunc);
  s.add_term(Rat(0), Rat(1));
  for (Int n = 1;; ++n) {
    Rat e = make_rat(n * n, Int(2));
    if (e > trunc) break;
    s.add_term(e, Rat(2));
  }
  return s;
}

PuiseuxSeries theta4(const Rat& trunc) {
  PuiseuxSeries s(trunc);
  s.add_term(Rat(0), Rat(1));
  for (Int n = 1;; ++n) {
    Rat e = make_rat(n * n, Int(2));
    if (e > trunc) break;
    s.add_term(e, n % 2 == 0 ? Rat(2) : Rat(-2));
  }
  return s;
}

PuiseuxSeries eta(const Rat& trunc) {
  // q^(1/24) * prod (1 - q^n); factors with n > trunc cannot contribute.
  PuiseuxSeries acc = PuiseuxSeries::monomial(make_rat(Int(1), Int(24)), Rat(1), trunc);
  for (Int n = 1; Rat(n) <= trunc; ++n) {
    PuiseuxSeries factor = PuiseuxSeries::monomial(Rat(0), Rat(1), trunc);
    factor.add_term(Rat(n), Rat(-1));
    acc = acc * factor;
  }
  return acc.truncated(trunc);
}

PuiseuxSeries eta_scaled(int k, const Rat& trunc) {
  if (k < 1) throw Error("eta_scaled: k must be >= 1");
  return eta(trunc * Rat(k)).scale_exponent(make_rat(Int(1), Int(k)));
}

}  // namespace typek

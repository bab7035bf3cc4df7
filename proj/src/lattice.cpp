#include "typek/lattice.hpp"

#include "typek/exact_linalg.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace typek {

Lattice::Lattice(IMat gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows() != gram_.cols()) throw Error("Lattice: Gram matrix must be square");
  if (!exact_eq(gram_, gram_.transpose().eval()))
    throw Error("Lattice: Gram matrix must be symmetric");
}

Lattice lattice_U() {
  IMat g(2, 2);
  g << 0, 1, 1, 0;
  return Lattice(std::move(g), "U");
}

Lattice lattice_A(int m) {
  if (m < 1) throw Error("A_m requires m >= 1");
  IMat g = IMat::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    g(i, i) = 2;
    if (i + 1 < m) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return Lattice(std::move(g), "A" + std::to_string(m));
}

Lattice lattice_D(int n) {
  if (n < 4) throw Error("D_n requires n >= 4");
  IMat g = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  // Chain 0-1-...-(n-3), fork nodes n-2 and n-1 both attached to n-3.
  for (int i = 0; i + 1 < n - 2; ++i) g(i, i + 1) = g(i + 1, i) = -1;
  g(n - 3, n - 2) = g(n - 2, n - 3) = -1;
  g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
  return Lattice(std::move(g), "D" + std::to_string(n));
}

Lattice lattice_E(int l) {
  if (l < 6 || l > 8) throw Error("E_l requires l in {6, 7, 8}");
  // Bourbaki numbering for E8 nodes 1..8: chain 1-3-4-5-6-7-8 with 2 joined
  // to 4; E6/E7 are the subdiagrams on the first 6/7 nodes.
  IMat g = IMat::Zero(l, l);
  for (int i = 0; i < l; ++i) g(i, i) = 2;
  auto join = [&](int a, int b) {
    if (a <= l && b <= l) g(a - 1, b - 1) = g(b - 1, a - 1) = -1;
  };
  join(1, 3);
  join(3, 4);
  join(4, 5);
  join(5, 6);
  join(6, 7);
  join(7, 8);
  join(2, 4);
  return Lattice(std::move(g), "E" + std::to_string(l));
}

Lattice lattice_rank1(const Int& a) {
  if (a == 0) throw Error("<a> requires a != 0");
  IMat g(1, 1);
  g(0, 0) = a;
  std::ostringstream os;
  os << "<" << a << ">";
  return Lattice(std::move(g), os.str());
}

Lattice lattice_K3() {
  Lattice l = direct_sum(direct_sum(lattice_U(), lattice_U()), lattice_U());
  Lattice e8m = rescale(lattice_E(8), -1);
  l = direct_sum(direct_sum(l, e8m), e8m);
  l.set_label("K3");
  return l;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const Eigen::Index ra = a.rank(), rb = b.rank();
  IMat g = IMat::Zero(ra + rb, ra + rb);
  g.topLeftCorner(ra, ra) = a.gram();
  g.bottomRightCorner(rb, rb) = b.gram();
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  return Lattice(std::move(g), std::move(label));
}

Lattice rescale(const Lattice& l, const Int& n) {
  if (n == 0) throw Error("rescale by 0 is not a lattice operation");
  IMat g = l.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) *= n;
  std::string label;
  if (!l.label().empty()) {
    std::ostringstream os;
    os << l.label() << "(" << n << ")";
    label = os.str();
  }
  return Lattice(std::move(g), std::move(label));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected integer", start);
    Int v = 0;
    for (std::size_t i = digits_start; i < pos; ++i) v = v * 10 + (s[i] - '0');
    return neg ? Int(-v) : v;
  }

  Lattice parse_term() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("expected term", pos);
    char c = s[pos];
    if (c == '<') {
      ++pos;
      Int a = parse_int();
      expect('>');
      if (a == 0) throw ParseError("<0> is not a lattice", pos);
      return lattice_rank1(a);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      Int k = parse_int();
      expect('*');
      if (k < 1) throw ParseError("copy count must be >= 1", start);
      Lattice unit = parse_term();
      Lattice sum = unit;
      for (Int i = 1; i < k; ++i) sum = direct_sum(sum, unit);
      std::ostringstream os;
      os << k << "*" << unit.label();
      sum.set_label(os.str());
      return sum;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      std::string name;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
        name += s[pos++];
      Lattice base = [&]() -> Lattice {
        if (name == "U") return lattice_U();
        if (name == "K3") return lattice_K3();
        if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E')) {
          int sub = 0;
          for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
              throw ParseError("bad series subscript in '" + name + "'", start);
            sub = sub * 10 + (name[i] - '0');
          }
          switch (name[0]) {
            case 'A':
              if (sub < 1) throw ParseError("A_m requires m >= 1", start);
              return lattice_A(sub);
            case 'D':
              if (sub < 4) throw ParseError("D_n requires n >= 4", start);
              return lattice_D(sub);
            default:
              if (sub < 6 || sub > 8) throw ParseError("E_l requires l in {6, 7, 8}", start);
              return lattice_E(sub);
          }
        }
        throw ParseError("unknown lattice name '" + name + "'", start);
      }();
      if (peek() == '(') {
        ++pos;
        Int n = parse_int();
        expect(')');
        if (n == 0) throw ParseError("rescale by 0 is not allowed", start);
        return rescale(base, n);
      }
      return base;
    }
    throw ParseError("expected term", pos);
  }

  Lattice parse_expr() {
    Lattice acc = parse_term();
    std::string label = acc.label();
    while (peek() == '+') {
      ++pos;
      Lattice t = parse_term();
      label += "+" + t.label();
      acc = direct_sum(acc, t);
    }
    acc.set_label(label);
    if (!eof()) throw ParseError("unexpected trailing input", pos);
    return acc;
  }
};

}  // namespace

Lattice parse_lattice(std::string_view expr) {
  Parser p{expr};
  return p.parse_expr();
}

// ---------------------------------------------------------------------------
// Invariants

Int disc(const Lattice& l) { return det_int(l.gram()); }

Signature signature(const Lattice& l) {
  CongruenceDiag d = congruent_diagonalize(to_rational(l.gram()));
  Signature sig;
  for (Eigen::Index i = 0; i < d.diag.size(); ++i) {
    if (d.diag(i) > 0)
      ++sig.pos;
    else if (d.diag(i) < 0)
      ++sig.neg;
    else
      ++sig.zero;
  }
  return sig;
}

bool is_even(const Lattice& l) {
  for (Eigen::Index i = 0; i < l.rank(); ++i)
    if (l.gram()(i, i) % 2 != 0) return false;
  return true;
}

bool is_unimodular(const Lattice& l) { return iabs(disc(l)) == 1; }

Sublattice orthogonal_complement(const Lattice& ambient, const IMat& basis) {
  if (basis.cols() != ambient.rank())
    throw Error("orthogonal_complement: basis width must equal ambient rank");
  if (rank_int(basis) != basis.rows())
    throw Error("orthogonal_complement: basis rows must be independent");
  // x is orthogonal to the span iff (basis * G) x = 0.
  IMat bg = basis * ambient.gram();
  IMat comp = saturated_kernel(bg);
  IMat gram = comp * ambient.gram() * comp.transpose();
  return {comp, Lattice(std::move(gram))};
}

// ---------------------------------------------------------------------------
// JSON

std::string lattice_to_json(const Lattice& l) {
  nlohmann::json j;
  j["expr"] = l.label();
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < l.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < l.rank(); ++k) row.push_back(l.gram()(i, k).str());
    rows.push_back(std::move(row));
  }
  j["gram"] = std::move(rows);
  return j.dump();
}

Lattice lattice_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("gram")) throw Error("lattice_from_json: missing 'gram'");
  const auto& rows = j["gram"];
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  IMat g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw Error("lattice_from_json: gram matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& cell = row[static_cast<std::size_t>(k)];
      g(i, k) = cell.is_string() ? Int(cell.get<std::string>()) : Int(cell.get<long long>());
    }
  }
  std::string label = j.value("expr", std::string{});
  Lattice l(std::move(g), label);
  if (!label.empty()) {
    // The expression and the matrix must agree.
    Lattice reparsed = parse_lattice(label);
    if (!exact_eq(reparsed.gram(), l.gram()))
      throw VerificationError("lattice_from_json: 'expr' disagrees with 'gram'");
  }
  return l;
}

}  // namespace typek

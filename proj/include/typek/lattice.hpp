// Integral lattices presented by Gram matrices, plus a tiny expression
// language for building them:
//
//   expr := term ("+" term)*
//   term := k "*" term            k >= 1 copies
//         | "<" a ">"             rank-1 lattice of square a (a != 0)
//         | NAME [ "(" n ")" ]    NAME in {U, Am, Dn, El, K3}, optional
//                                 rescale of the bilinear form by n != 0
//
// Examples: "U(2)+E8(-2)", "3*U+2*<-4>", "K3".
#pragma once

#include "typek/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace typek {

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class Lattice {
 public:
  Lattice() = default;
  // Gram matrix must be symmetric with integer entries.
  explicit Lattice(IMat gram, std::string label = {});

  Eigen::Index rank() const { return gram_.rows(); }
  const IMat& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

 private:
  IMat gram_;
  std::string label_;
};

// Standard building blocks.  A/D/E Gram matrices use the (positive definite)
// Cartan matrices; U is the rank-2 hyperbolic plane; K3 is the rank-22
// unimodular lattice U^3 + E8(-1)^2.
Lattice lattice_U();
Lattice lattice_A(int m);        // m >= 1
Lattice lattice_D(int n);        // n >= 4
Lattice lattice_E(int l);        // l in {6, 7, 8}
Lattice lattice_rank1(const Int& a);  // <a>, a != 0
Lattice lattice_K3();

Lattice direct_sum(const Lattice& a, const Lattice& b);
// Multiply the bilinear form by n != 0.
Lattice rescale(const Lattice& l, const Int& n);

// Parse the expression language above; throws ParseError with a position.
Lattice parse_lattice(std::string_view expr);

Int disc(const Lattice& l);  // det of the Gram matrix (signed)
Signature signature(const Lattice& l);
bool is_even(const Lattice& l);
bool is_unimodular(const Lattice& l);

// Orthogonal complement of the sublattice spanned by the rows of `basis`
// (coordinates in the ambient basis).  The result is saturated; the returned
// basis rows are coordinates in `ambient`.
struct Sublattice {
  IMat basis;       // rows = ambient coordinates of the basis vectors
  Lattice lattice;  // induced Gram matrix
};
Sublattice orthogonal_complement(const Lattice& ambient, const IMat& basis);

// JSON serialization: {"expr": <label>, "gram": [[...], ...]}.
std::string lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const std::string& text);

}  // namespace typek

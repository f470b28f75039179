#ifndef GRAPHFP_EXPR_HPP
#define GRAPHFP_EXPR_HPP

#include <map>
#include <set>
#include <span>
#include <string>

#include "graphfp/graph.hpp"
#include "graphfp/scalar.hpp"
#include "graphfp/word.hpp"

namespace graphfp {

/// Element of D_G: a finitely supported function on the vertices, i.e.
/// sum_v q_v L_v. Zero coefficients are never stored.
class DiagonalElement {
 public:
  DiagonalElement() = default;

  /// 1_{D_G} = sum of all vertex projections.
  static DiagonalElement identity(const DirectedGraph& g);
  static DiagonalElement projection(VertexId v) { return single(v, Scalar(1)); }
  static DiagonalElement single(VertexId v, Scalar q);

  const std::map<VertexId, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(VertexId v) const;

  void add(VertexId v, const Scalar& q);

  DiagonalElement& operator+=(const DiagonalElement& other);
  friend DiagonalElement operator+(DiagonalElement a, const DiagonalElement& b) {
    return a += b;
  }
  friend DiagonalElement operator-(DiagonalElement a, const DiagonalElement& b);
  /// Pointwise product (D_G is commutative).
  friend DiagonalElement operator*(const DiagonalElement& a, const DiagonalElement& b);
  friend DiagonalElement operator*(const Scalar& s, const DiagonalElement& d);

  friend bool operator==(const DiagonalElement&, const DiagonalElement&) = default;

 private:
  std::map<VertexId, Scalar> terms_;
};

/// Finite Fourier expansion sum p_w L_w^{u_w}. Zero coefficients are never
/// stored.
class FourierExpr {
 public:
  FourierExpr() = default;
  FourierExpr(const DiagonalElement& d);  // NOLINT(google-explicit-constructor)

  static FourierExpr of(const Letter& l, Scalar coeff = Scalar(1));

  const std::map<Letter, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Letter& l) const;

  void add(const Letter& l, const Scalar& coeff);

  /// Conjugates coefficients and stars letters.
  FourierExpr adjoint() const;

  FourierExpr& operator+=(const FourierExpr& other);
  friend FourierExpr operator+(FourierExpr a, const FourierExpr& b) { return a += b; }
  friend FourierExpr operator-(FourierExpr a, const FourierExpr& b);
  friend FourierExpr operator*(const Scalar& s, const FourierExpr& a);

  friend bool operator==(const FourierExpr&, const FourierExpr&) = default;

 private:
  std::map<Letter, Scalar> terms_;
};

/// d * a, letter by letter. Stays a Fourier expansion.
FourierExpr left_multiply(const DiagonalElement& d, const FourierExpr& a);
/// a * d, letter by letter.
FourierExpr right_multiply(const FourierExpr& a, const DiagonalElement& d);

/// Partition of the support F+(G:a) = V(G:a) u FP_*(G:a) u FP_*^c(G:a).
struct Support {
  std::set<VertexId> vertices;
  /// Paths w with both L_w and L_w* present.
  std::set<Path> star_paths;
  /// Remaining nonvertex paths.
  std::set<Path> nonstar_paths;

  /// FP(G:a)
  std::set<Path> paths() const;

  friend bool operator==(const Support&, const Support&) = default;
};

Support support(const FourierExpr& a);

/// Drops every nonvertex term.
DiagonalElement expectation(const FourierExpr& a);

/// Evaluated product: a linear combination of monomials L_a L_b*. Unlike a
/// FourierExpr it may hold mixed monomials (Toeplitz model), which E kills.
using Product = std::map<Monomial, Scalar>;

Product to_product(const DiagonalElement& d);
Product to_product(const FourierExpr& a);
Product multiply(const Product& x, const FourierExpr& y, Model model);
Product multiply(const FourierExpr& x, const FourierExpr& y, Model model);
DiagonalElement expectation(const Product& p);

/// One factor d_i a_i of a moment expression.
struct Factor {
  DiagonalElement d;
  FourierExpr a;
};

/// E(d_1 a_1 d_2 a_2 ... d_n a_n).
///
/// Expands left to right, pruning partial monomials whose height can no
/// longer return to zero.
DiagonalElement expectation_of_product(std::span<const Factor> factors, Model model);

std::string format_expr(const DirectedGraph& g, const FourierExpr& a);
std::string format_diagonal(const DirectedGraph& g, const DiagonalElement& d);
std::string format_product(const DirectedGraph& g, const Product& p);

}  // namespace graphfp

#endif  // GRAPHFP_EXPR_HPP

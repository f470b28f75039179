#ifndef GRAPHFP_FOCK_HPP
#define GRAPHFP_FOCK_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphfp/expr.hpp"

namespace graphfp {

/// Basis {xi_w : |w| <= depth} of the truncated graph Hilbert space, in
/// enumerate_semigroupoid order.
class FockBasis {
 public:
  FockBasis(const DirectedGraph& g, std::size_t depth);

  std::size_t depth() const { return depth_; }
  std::size_t size() const { return paths_.size(); }
  const Path& path(std::size_t i) const { return paths_.at(i); }
  std::optional<std::size_t> index_of(const Path& w) const;

 private:
  std::size_t depth_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
};

/// Sparse matrix over a FockBasis; entry (row, col) is <A xi_col, xi_row>.
class SparseOperator {
 public:
  explicit SparseOperator(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const {
    return entries_;
  }
  Scalar at(std::size_t row, std::size_t col) const;
  void add(std::size_t row, std::size_t col, const Scalar& value);

  /// Conjugate transpose.
  SparseOperator adjoint() const;

  /// A x for a sparse vector x (index -> coefficient).
  std::map<std::size_t, Scalar> apply(const std::map<std::size_t, Scalar>& x) const;

  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

/// L_w xi_h = xi_{wh} when wh is admissible and fits the basis, else 0;
/// L_w* xi_{wh} = xi_h; L_v projects onto {xi_h : s(h) = v}.
/// @throw Error(DepthExceeded) if |w| > basis depth
SparseOperator build_generator(const FockBasis& basis, const Letter& letter);

/// Smallest depth at which the truncated word acts on vertex vectors
/// exactly: the largest of the lattice path's prefix and suffix maxima and
/// the longest letter.
std::size_t required_depth(std::span<const Letter> word);

/// Truncated Fock representation at a fixed depth, with generator matrices
/// built on first use.
class FockOracle {
 public:
  FockOracle(const DirectedGraph& g, std::size_t depth) : g_(g), basis_(g, depth) {}

  const FockBasis& basis() const { return basis_; }
  const SparseOperator& generator(const Letter& l);

  /// sum_v <W xi_v, xi_v> L_v, applying the generator matrices of W to each
  /// vertex vector.
  /// @throw Error(TruncationRisk) if depth < required_depth(word)
  DiagonalElement expectation(std::span<const Letter> word);

 private:
  const DirectedGraph& g_;
  FockBasis basis_;
  std::map<Letter, SparseOperator> generators_;
};

/// Same as FockOracle(g, depth).expectation(word), but computed by
/// multiplying out the full matrix of W.
/// @throw Error(TruncationRisk) if depth < required_depth(word)
DiagonalElement oracle_expectation(const DirectedGraph& g, std::span<const Letter> word,
                                   std::size_t depth);

}  // namespace graphfp

#endif  // GRAPHFP_FOCK_HPP

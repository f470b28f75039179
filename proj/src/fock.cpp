#include "graphfp/fock.hpp"

#include <algorithm>

#include "graphfp/error.hpp"

namespace graphfp {

FockBasis::FockBasis(const DirectedGraph& g, std::size_t depth)
    : depth_(depth), paths_(enumerate_semigroupoid(g, depth)) {
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], i);
}

std::optional<std::size_t> FockBasis::index_of(const Path& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Scalar SparseOperator::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Scalar() : it->second;
}

void SparseOperator::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (row >= dim_ || col >= dim_) throw std::out_of_range("SparseOperator index");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(dim_);
  for (const auto& [rc, v] : entries_) out.entries_.emplace(std::make_pair(rc.second, rc.first), v.conj());
  return out;
}

std::map<std::size_t, Scalar> SparseOperator::apply(
    const std::map<std::size_t, Scalar>& x) const {
  std::map<std::size_t, Scalar> out;
  for (const auto& [rc, v] : entries_) {
    auto it = x.find(rc.second);
    if (it == x.end()) continue;
    auto& slot = out[rc.first];
    slot += v * it->second;
    if (slot.is_zero()) out.erase(rc.first);
  }
  return out;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("SparseOperator dimension mismatch");
  // Column-indexed view of a for the inner index.
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Scalar*>>> a_by_col;
  for (const auto& [rc, v] : a.entries_) a_by_col[rc.second].emplace_back(rc.first, &v);
  SparseOperator out(a.dim_);
  for (const auto& [rc, bv] : b.entries_) {
    auto it = a_by_col.find(rc.first);
    if (it == a_by_col.end()) continue;
    for (const auto& [row, av] : it->second) out.add(row, rc.second, *av * bv);
  }
  return out;
}

SparseOperator build_generator(const FockBasis& basis, const Letter& letter) {
  const Path& w = letter.path();
  if (w.length() > basis.depth())
    throw Error(ErrorKind::DepthExceeded, "letter of length " + std::to_string(w.length()) +
                                              " exceeds depth " +
                                              std::to_string(basis.depth()));
  SparseOperator op(basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Path& h = basis.path(col);
    if (letter.is_vertex()) {
      if (h.source() == w.source()) op.add(col, col, Scalar(1));
    } else if (!letter.star()) {
      auto wh = concat(w, h);
      if (!wh) continue;
      if (auto row = basis.index_of(*wh)) op.add(*row, col, Scalar(1));
    } else {
      if (auto rest = h.strip_prefix(w)) op.add(*basis.index_of(*rest), col, Scalar(1));
    }
  }
  return op;
}

std::size_t required_depth(std::span<const Letter> word) {
  auto lp = lattice_path(word);
  std::size_t longest = 0;
  for (const auto& l : word) longest = std::max(longest, l.path().length());
  return std::max({longest, static_cast<std::size_t>(lp.max_prefix_height()),
                   static_cast<std::size_t>(lp.max_suffix_height())});
}

namespace {

void check_guard(std::span<const Letter> word, std::size_t depth) {
  auto needed = required_depth(word);
  if (depth < needed)
    throw Error(ErrorKind::TruncationRisk, "word needs depth " + std::to_string(needed) +
                                               ", got " + std::to_string(depth));
}

}  // namespace

const SparseOperator& FockOracle::generator(const Letter& l) {
  auto it = generators_.find(l);
  if (it == generators_.end()) it = generators_.emplace(l, build_generator(basis_, l)).first;
  return it->second;
}

DiagonalElement FockOracle::expectation(std::span<const Letter> word) {
  check_guard(word, basis_.depth());
  DiagonalElement out;
  for (VertexId v = 0; v < g_.vertex_count(); ++v) {
    auto i = *basis_.index_of(Path::vertex(v));
    std::map<std::size_t, Scalar> x{{i, Scalar(1)}};
    for (auto l = word.rbegin(); l != word.rend() && !x.empty(); ++l) x = generator(*l).apply(x);
    auto it = x.find(i);
    if (it != x.end()) out.add(v, it->second);
  }
  return out;
}

DiagonalElement oracle_expectation(const DirectedGraph& g, std::span<const Letter> word,
                                   std::size_t depth) {
  check_guard(word, depth);
  FockBasis basis(g, depth);
  SparseOperator product(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) product.add(i, i, Scalar(1));
  for (const auto& l : word) product = product * build_generator(basis, l);

  DiagonalElement out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto i = *basis.index_of(Path::vertex(v));
    out.add(v, product.at(i, i));
  }
  return out;
}

}  // namespace graphfp

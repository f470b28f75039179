#ifndef GRAPHFP_NC_PARTITION_HPP
#define GRAPHFP_NC_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace graphfp {

/// Largest n accepted by enumerate_nc.
inline constexpr int kMaxNcSize = 12;

/// Noncrossing partition of {0, ..., n-1}. Blocks are sorted and ordered by
/// their least element, so equal partitions compare equal.
class NoncrossingPartition {
 public:
  /// @throw Error(SizeOutOfRange) if the blocks do not partition {0..n-1}
  ///        or two blocks cross
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks);

  static NoncrossingPartition one(int n);
  static NoncrossingPartition zero(int n);

  int size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_of(int i) const { return block_of_.at(i); }

  /// "{1,3}{2}" (1-based)
  std::string to_string() const;

  friend bool operator==(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::size_t> block_of_;
};

std::int64_t catalan(int n);

/// True when no a < b < c < d has a, c in one block and b, d in another.
bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks);

/// All of NC(n), built by choosing the block of the first element and
/// recursing into the gaps it leaves. |NC(n)| = catalan(n).
/// @throw Error(SizeOutOfRange) unless 1 <= n <= kMaxNcSize
std::vector<NoncrossingPartition> enumerate_nc(int n);

/// Index of some block that is a run of consecutive integers; picks the
/// rightmost such block.
std::size_t interval_block(const NoncrossingPartition& pi);

/// Kreweras complement, computed as the cycles of pi^{-1} gamma with gamma
/// the cycle (0 1 ... n-1) and pi's blocks read as increasing cycles.
NoncrossingPartition kreweras_complement(const NoncrossingPartition& pi);

/// mu(pi, 1_n) in the lattice NC(n). [pi, 1_n] is isomorphic to the product
/// of NC(|B|) over the blocks B of K(pi), giving
/// prod_B (-1)^{|B|-1} catalan(|B|-1).
std::int64_t moebius_to_top(const NoncrossingPartition& pi);

/// pi <= sigma in refinement order.
bool refines(const NoncrossingPartition& pi, const NoncrossingPartition& sigma);

}  // namespace graphfp

#endif  // GRAPHFP_NC_PARTITION_HPP

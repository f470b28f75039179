#include "graphfp/nc_partition.hpp"

#include <algorithm>
#include <functional>

#include "graphfp/error.hpp"

namespace graphfp {

namespace {

void canonicalize(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n < 0 ? 0 : n, SIZE_MAX) {
  if (n < 1) throw Error(ErrorKind::SizeOutOfRange, "partition size must be positive");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw Error(ErrorKind::SizeOutOfRange, "empty block");
    for (int i : blocks_[b]) {
      if (i < 0 || i >= n || block_of_[i] != SIZE_MAX)
        throw Error(ErrorKind::SizeOutOfRange, "blocks do not partition {0..n-1}");
      block_of_[i] = b;
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), SIZE_MAX) != block_of_.end())
    throw Error(ErrorKind::SizeOutOfRange, "blocks do not cover {0..n-1}");
  if (!is_noncrossing(n, blocks_)) throw Error(ErrorKind::SizeOutOfRange, "crossing blocks");
  canonicalize(blocks_);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int i : blocks_[b]) block_of_[i] = b;
}

NoncrossingPartition NoncrossingPartition::one(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return NoncrossingPartition(n, {all});
}

NoncrossingPartition NoncrossingPartition::zero(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i});
  return NoncrossingPartition(n, std::move(blocks));
}

std::string NoncrossingPartition::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    s += '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(b[k] + 1);
    }
    s += '}';
  }
  return s;
}

std::int64_t catalan(int n) {
  std::int64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i : blocks[b])
      if (i >= 0 && i < n) owner[i] = static_cast<int>(b);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b])
            return false;
  return true;
}

std::vector<NoncrossingPartition> enumerate_nc(int n) {
  if (n < 1 || n > kMaxNcSize)
    throw Error(ErrorKind::SizeOutOfRange,
                "n = " + std::to_string(n) + " outside [1, " + std::to_string(kMaxNcSize) + "]");

  using Blocks = std::vector<std::vector<int>>;
  // All noncrossing partitions of the integer range [lo, hi).
  std::function<std::vector<Blocks>(int, int)> range_partitions = [&](int lo, int hi) {
    std::vector<Blocks> out;
    if (lo >= hi) {
      out.emplace_back();
      return out;
    }
    // Choose the rest of lo's block as a subset of (lo, hi), in increasing
    // bitmask order; the gaps between chosen elements and the tail after the
    // last one are independent subproblems.
    int span = hi - lo - 1;
    for (std::uint32_t mask = 0; mask < (1u << span); ++mask) {
      std::vector<int> block{lo};
      for (int k = 0; k < span; ++k)
        if (mask & (1u << k)) block.push_back(lo + 1 + k);
      std::vector<std::pair<int, int>> gaps;
      for (std::size_t k = 0; k + 1 < block.size(); ++k)
        gaps.emplace_back(block[k] + 1, block[k + 1]);
      gaps.emplace_back(block.back() + 1, hi);

      std::vector<Blocks> partial{Blocks{block}};
      for (auto [a, b] : gaps) {
        auto sub = range_partitions(a, b);
        std::vector<Blocks> next;
        next.reserve(partial.size() * sub.size());
        for (const auto& p : partial)
          for (const auto& s : sub) {
            Blocks merged = p;
            merged.insert(merged.end(), s.begin(), s.end());
            next.push_back(std::move(merged));
          }
        partial = std::move(next);
      }
      out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
  };

  std::vector<NoncrossingPartition> out;
  for (auto& blocks : range_partitions(0, n)) out.emplace_back(n, std::move(blocks));
  return out;
}

std::size_t interval_block(const NoncrossingPartition& pi) {
  const auto& blocks = pi.blocks();
  for (std::size_t b = blocks.size(); b-- > 0;) {
    const auto& block = blocks[b];
    if (block.back() - block.front() + 1 == static_cast<int>(block.size())) return b;
  }
  // Unreachable for a noncrossing partition: the block with the smallest
  // span is always an interval.
  throw Error(ErrorKind::SizeOutOfRange, "no interval block");
}

NoncrossingPartition kreweras_complement(const NoncrossingPartition& pi) {
  int n = pi.size();
  // pi as a permutation: each block cycled in increasing order.
  std::vector<int> pi_inv(n);
  for (const auto& b : pi.blocks())
    for (std::size_t k = 0; k < b.size(); ++k) pi_inv[b[(k + 1) % b.size()]] = b[k];
  std::vector<int> k_perm(n);
  for (int i = 0; i < n; ++i) k_perm[i] = pi_inv[(i + 1) % n];

  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = k_perm[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    blocks.push_back(std::move(cycle));
  }
  return NoncrossingPartition(n, std::move(blocks));
}

std::int64_t moebius_to_top(const NoncrossingPartition& pi) {
  std::int64_t mu = 1;
  auto complement = kreweras_complement(pi);
  for (const auto& b : complement.blocks()) {
    int k = static_cast<int>(b.size());
    mu *= ((k - 1) % 2 == 0 ? 1 : -1) * catalan(k - 1);
  }
  return mu;
}

bool refines(const NoncrossingPartition& pi, const NoncrossingPartition& sigma) {
  for (const auto& b : pi.blocks())
    for (int i : b)
      if (sigma.block_of(i) != sigma.block_of(b.front())) return false;
  return true;
}

}  // namespace graphfp

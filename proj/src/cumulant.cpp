#include "graphfp/cumulant.hpp"

#include <map>
#include <mutex>

#include "graphfp/error.hpp"

namespace graphfp {

namespace {

NcTable build_table(int n) {
  NcTable t;
  t.partitions = enumerate_nc(n);
  t.moebius.reserve(t.partitions.size());
  for (const auto& pi : t.partitions) t.moebius.push_back(moebius_to_top(pi));

  if (n <= 6) {
    for (std::size_t i = 0; i < t.partitions.size(); ++i) {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j < t.partitions.size(); ++j)
        if (refines(t.partitions[i], t.partitions[j])) sum += t.moebius[j];
      std::int64_t expected = t.partitions[i].block_count() == 1 ? 1 : 0;
      if (sum != expected)
        throw std::logic_error("Moebius factorization disagrees with the recursion at " +
                               t.partitions[i].to_string());
    }
  }
  return t;
}

}  // namespace

const NcTable& nc_table(int n) {
  static std::mutex mutex;
  static std::map<int, NcTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_table(n)).first;
  return it->second;
}

DiagonalElement nested_apply(const NoncrossingPartition& pi, const MomentArgs& args,
                             const BlockFunctional& block_value) {
  if (args.size() != static_cast<std::size_t>(pi.size()))
    throw Error(ErrorKind::SizeMismatch, std::to_string(args.size()) +
                                             " arguments for a partition of size " +
                                             std::to_string(pi.size()));
  MomentArgs cur = args;
  auto blocks = pi.blocks();

  while (blocks.size() > 1) {
    // Rightmost interval block.
    std::size_t b = blocks.size();
    while (b-- > 0) {
      const auto& blk = blocks[b];
      if (blk.back() - blk.front() + 1 == static_cast<int>(blk.size())) break;
    }
    int p = blocks[b].front();
    int k = static_cast<int>(blocks[b].size());

    auto value = block_value(std::span<const Factor>(cur).subspan(p, k));
    if (value.is_zero()) return {};
    cur.erase(cur.begin() + p, cur.begin() + p + k);
    if (p > 0)
      cur[p - 1].a = right_multiply(cur[p - 1].a, value);
    else
      cur[0].d = value * cur[0].d;

    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
    for (auto& blk : blocks)
      for (int& i : blk)
        if (i > p) i -= k;
  }
  return block_value(cur);
}

DiagonalElement nested_expectation(const NoncrossingPartition& pi, const MomentArgs& args,
                                   Model model) {
  return nested_apply(pi, args, [model](std::span<const Factor> f) {
    return expectation_of_product(f, model);
  });
}

DiagonalElement cumulant(const MomentArgs& args, Model model) {
  if (args.empty()) throw Error(ErrorKind::SizeMismatch, "cumulant of no arguments");
  const auto& table = nc_table(static_cast<int>(args.size()));
  DiagonalElement k;
  for (std::size_t i = 0; i < table.partitions.size(); ++i) {
    auto e = nested_expectation(table.partitions[i], args, model);
    if (!e.is_zero()) k += Scalar(table.moebius[i]) * e;
  }
  return k;
}

DiagonalElement nested_cumulant(const NoncrossingPartition& pi, const MomentArgs& args,
                                Model model) {
  return nested_apply(pi, args, [model](std::span<const Factor> f) {
    return cumulant(MomentArgs(f.begin(), f.end()), model);
  });
}

WordCumulant word_cumulant(const DirectedGraph& g, std::span<const Letter> word, Model model) {
  if (word.empty()) throw Error(ErrorKind::SizeMismatch, "cumulant of the empty word");
  MomentArgs args;
  for (const auto& l : word) args.push_back({DiagonalElement::identity(g), FourierExpr::of(l)});

  WordCumulant out;
  const auto& table = nc_table(static_cast<int>(word.size()));
  for (std::size_t i = 0; i < table.partitions.size(); ++i) {
    if (nested_expectation(table.partitions[i], args, model).is_zero()) continue;
    out.connected.push_back(table.partitions[i]);
    out.mu += table.moebius[i];
  }
  out.expectation = expectation_of_product(args, model);
  out.value = Scalar(out.mu) * out.expectation;
  return out;
}

namespace {

MomentArgs repeated(const DirectedGraph& g, const FourierExpr& a, int n) {
  return MomentArgs(static_cast<std::size_t>(n), Factor{DiagonalElement::identity(g), a});
}

void check_order(int n_max) {
  if (n_max < 1 || n_max > kMaxNcSize)
    throw Error(ErrorKind::SizeOutOfRange, "order " + std::to_string(n_max));
}

}  // namespace

std::vector<DiagonalElement> moment_table(const DirectedGraph& g, const FourierExpr& a,
                                          int n_max, Model model) {
  check_order(n_max);
  std::vector<DiagonalElement> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(expectation_of_product(repeated(g, a, n), model));
  return out;
}

std::vector<DiagonalElement> cumulant_table(const DirectedGraph& g, const FourierExpr& a,
                                            int n_max, Model model) {
  check_order(n_max);
  std::vector<DiagonalElement> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(cumulant(repeated(g, a, n), model));
  return out;
}

std::vector<std::vector<DiagonalElement>> default_diagonal_samples(const DirectedGraph& g,
                                                                   int n) {
  std::vector<std::vector<DiagonalElement>> out;
  out.emplace_back(static_cast<std::size_t>(n), DiagonalElement::identity(g));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out.emplace_back(static_cast<std::size_t>(n), DiagonalElement::projection(v));
  return out;
}

DiagonalSampler default_sampler(const DirectedGraph& g) {
  return [&g](int n) { return default_diagonal_samples(g, n); };
}

MixedCumulantResult mixed_cumulants_vanish(const DirectedGraph& g, const FourierExpr& a,
                                           const FourierExpr& b, int n_max,
                                           const DiagonalSampler& samples, Model model) {
  (void)g;
  if (n_max < 2 || n_max > kMaxNcSize)
    throw Error(ErrorKind::SizeOutOfRange, "n_max " + std::to_string(n_max));
  const FourierExpr family[4] = {a, a.adjoint(), b, b.adjoint()};
  const char* names[4] = {"a", "a*", "b", "b*"};

  for (int n = 2; n <= n_max; ++n) {
    auto tuples = samples(n);
    std::vector<int> pattern(n, 0);
    while (true) {
      bool has_a = false, has_b = false;
      for (int x : pattern) (x < 2 ? has_a : has_b) = true;
      if (has_a && has_b) {
        for (const auto& tuple : tuples) {
          MomentArgs args;
          for (int i = 0; i < n; ++i) args.push_back({tuple[i], family[pattern[i]]});
          auto k = cumulant(args, model);
          if (!k.is_zero()) {
            MixedCumulantWitness w;
            w.n = n;
            for (int x : pattern) w.pattern.emplace_back(names[x]);
            w.coefficients = tuple;
            w.value = std::move(k);
            return {false, std::move(w)};
          }
        }
      }
      int i = n - 1;
      while (i >= 0 && pattern[i] == 3) pattern[i--] = 0;
      if (i < 0) break;
      ++pattern[i];
    }
  }
  return {};
}

}  // namespace graphfp

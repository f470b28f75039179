#ifndef GRAPHFP_CUMULANT_HPP
#define GRAPHFP_CUMULANT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphfp/expr.hpp"
#include "graphfp/nc_partition.hpp"

namespace graphfp {

/// Arguments d_1 a_1, ..., d_n a_n of a moment or cumulant.
using MomentArgs = std::vector<Factor>;

/// NC(n) with mu(pi, 1_n) for each partition, computed once per n. The
/// first request for n <= 6 also checks the factorized Moebius values
/// against the defining recursion sum_{sigma >= pi} mu(sigma, 1_n) = delta.
struct NcTable {
  std::vector<NoncrossingPartition> partitions;
  std::vector<std::int64_t> moebius;
};

const NcTable& nc_table(int n);

/// A D_G-valued multiplicative functional evaluated on one block.
using BlockFunctional = std::function<DiagonalElement(std::span<const Factor>)>;

/// Nested evaluation of @p block_value along @p pi: repeatedly takes an
/// interval block, evaluates it, and folds the value into the argument on
/// its left (a_{p-1} -> a_{p-1} * value) or, for a leading block, into the
/// next diagonal coefficient.
/// @throw Error(SizeMismatch) if args.size() != pi.size()
DiagonalElement nested_apply(const NoncrossingPartition& pi, const MomentArgs& args,
                             const BlockFunctional& block_value);

/// E-hat(pi)(d_1 a_1, ..., d_n a_n)
DiagonalElement nested_expectation(const NoncrossingPartition& pi, const MomentArgs& args,
                                   Model model);

/// k_n = sum_{pi in NC(n)} E-hat(pi) mu(pi, 1_n)
DiagonalElement cumulant(const MomentArgs& args, Model model);

/// k_pi: cumulants nested along pi.
DiagonalElement nested_cumulant(const NoncrossingPartition& pi, const MomentArgs& args,
                                Model model);

/// Cumulant of a single word via its connected set: the partitions with
/// nonvanishing E-hat and the sum of their Moebius values.
struct WordCumulant {
  std::vector<NoncrossingPartition> connected;
  std::int64_t mu = 0;
  DiagonalElement expectation;
  /// mu * E(word)
  DiagonalElement value;
};

WordCumulant word_cumulant(const DirectedGraph& g, std::span<const Letter> word, Model model);

/// E(a^n), n = 1..n_max.
std::vector<DiagonalElement> moment_table(const DirectedGraph& g, const FourierExpr& a,
                                          int n_max, Model model);

/// k_n(a, ..., a), n = 1..n_max.
std::vector<DiagonalElement> cumulant_table(const DirectedGraph& g, const FourierExpr& a,
                                            int n_max, Model model);

/// Diagonal coefficient tuples: the all-identity tuple, then for each vertex
/// the tuple with every entry L_v.
std::vector<std::vector<DiagonalElement>> default_diagonal_samples(const DirectedGraph& g,
                                                                   int n);

/// Supplies the d-tuples of length n to try.
using DiagonalSampler = std::function<std::vector<std::vector<DiagonalElement>>(int n)>;

DiagonalSampler default_sampler(const DirectedGraph& g);

struct MixedCumulantWitness {
  int n = 0;
  /// Entries "a", "a*", "b", "b*".
  std::vector<std::string> pattern;
  std::vector<DiagonalElement> coefficients;
  DiagonalElement value;
};

struct MixedCumulantResult {
  bool vanish = true;
  std::optional<MixedCumulantWitness> witness;
};

/// Bounded freeness test for the *-families {a, a*} and {b, b*}: checks
/// k_n(d_1 x_1, ..., d_n x_n) = 0 for every n in [2, n_max], every pattern
/// x_i in {a, a*, b, b*} using both families, and every sampled tuple.
MixedCumulantResult mixed_cumulants_vanish(const DirectedGraph& g, const FourierExpr& a,
                                           const FourierExpr& b, int n_max,
                                           const DiagonalSampler& samples, Model model);

}  // namespace graphfp

#endif  // GRAPHFP_CUMULANT_HPP

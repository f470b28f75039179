#ifndef GRAPHFP_TOOLS_VERIFY_HPP
#define GRAPHFP_TOOLS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "graphfp/compress.hpp"

namespace graphfp::cli {

enum class Status { Pass, Fail, Info };

const char* to_string(Status s);

struct CheckResult {
  std::string check;
  std::string graph;
  std::string model;
  Status status;
  std::string detail;
};

struct NamedGraph {
  std::string name;
  DirectedGraph graph;
};

using MoebiusFunction = std::function<std::int64_t(const NoncrossingPartition&)>;

struct VerifyOptions {
  std::vector<Model> models{Model::CK};
  int n_max = 4;
  std::size_t depth = 5;
  /// Random elements drawn per graph and check.
  int samples = 5;
  unsigned seed = 1;
  /// mu(pi, 1_n) used by the Moebius consistency check.
  MoebiusFunction moebius = moebius_to_top;
};

/// G1 (one loop), G2 (one edge) and two loops plus an edge.
std::vector<NamedGraph> builtin_graphs();

/// Runs every check on every graph and model. When both models are
/// requested, also reports the L_l + L_l* moment divergence as Info.
std::vector<CheckResult> run_verify(const std::vector<NamedGraph>& graphs,
                                    const VerifyOptions& options);

}  // namespace graphfp::cli

#endif  // GRAPHFP_TOOLS_VERIFY_HPP

#ifndef GRAPHFP_TOOLS_CLI_HPP
#define GRAPHFP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "verify.hpp"

namespace graphfp::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxMomentOrder = 10;
constexpr std::size_t kMaxDepth = 8;

/// Runs the graphfp command line. args excludes the program name.
/// @p verify_options seeds the verify subcommand (tests use it to inject a
/// Moebius function); command-line flags override models, n_max and depth.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        VerifyOptions verify_options = {});

}  // namespace graphfp::cli

#endif  // GRAPHFP_TOOLS_CLI_HPP

#ifndef GINPROP_TOOLS_CLI_HPP
#define GINPROP_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ginprop/monomial_order.hpp"
#include "ginprop/subspace.hpp"

namespace ginprop::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,
  kInconclusive = 2,
  kUsageError = 3,
};

struct RunConfig {
  std::optional<int> vars;
  MonomialOrder order = MonomialOrder::revlex;
  bool order_given = false;
  std::uint64_t seed = 0;
  int trials = 3;
  int bound = 100;
  int dmax = 4;
  bool json = false;
  std::vector<std::string> inputs;
};

// Reads a subspace file; header fields win over flags, and every conflict is
// reported on `warnings`. Throws ParseError (with line numbers) on bad input
// or mixed degrees.
Subspace load_subspace(const std::string& path, const RunConfig& config,
                       std::ostream& warnings);

// Entry point shared by the binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ginprop::cli

#endif

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "montype/cycles.hpp"
#include "montype/groebner.hpp"

namespace montype {

struct RunConfig {
  std::string command;  // classify, linear-type, cycles, rees, conjecture
  std::string input;
  std::optional<int> max_degree;
  bool json = false;
  CycleMode mode = CycleMode::Special;
  std::optional<std::size_t> max_length;
  bool emit_groebner = false;
  std::size_t length = 4;
  std::size_t patches = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  Budget budget;
  unsigned threads = 1;
};

enum ExitCode : int { ExitOk = 0, ExitPrecondition = 2, ExitResourceLimit = 3 };

/// Executes one subcommand, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace montype

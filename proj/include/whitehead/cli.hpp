#ifndef WHITEHEAD_CLI_HPP_
#define WHITEHEAD_CLI_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "whitehead/algorithm.hpp"

namespace whitehead {

enum class Command { Factorize, Minimize, Subbasis, Graph, Batch };

enum class OutputFormat { Json, Text, Dot };

struct RunConfig {
  Command command = Command::Factorize;
  Strategy strategy{};
  OutputFormat format = OutputFormat::Json;
  bool trace = false;
  std::optional<std::size_t> rank_override{};
  std::optional<std::size_t> max_iters{};
};

struct CliResult {
  int exit_code = 0;   // 0 ok, 1 input error, 2 internal invariant violation
  std::string output;  // stdout payload
  std::string error;   // stderr payload
};

/// Parses the input text, runs the configured command and renders the
/// report. Never throws; failures are mapped to exit codes. Batch mode
/// treats each input line independently and always emits JSON records.
CliResult run_command(const RunConfig& config, const std::string& input);

}  // namespace whitehead

#endif  // WHITEHEAD_CLI_HPP_

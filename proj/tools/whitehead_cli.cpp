// Command-line front end for the Whitehead factorization toolkit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "whitehead/cli.hpp"

namespace {

struct CommonFlags {
  std::string input_text;
  std::string input_file;
  std::string strategy = "lex";
  std::string format;
  std::uint64_t seed = 0;
  bool trace = false;
  std::int64_t rank = -1;
  std::int64_t max_iters = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& default_format) {
  flags.format = default_format;
  cmd->add_option("relators", flags.input_text, "relator list, e.g. \"abA [abab]\"");
  cmd->add_option("--input", flags.input_file, "read the relator list from a file");
  cmd->add_option("--rank", flags.rank, "basis rank override");
  cmd->add_option("--strategy", flags.strategy, "choice policy: lex, first or random")
      ->check(CLI::IsMember({"lex", "first", "random"}));
  cmd->add_option("--seed", flags.seed, "seed for the random strategy");
  cmd->add_option("--format", flags.format, "output format: json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  cmd->add_flag("--trace", flags.trace, "include the descent trace in the report");
  cmd->add_option("--max-iters", flags.max_iters, "hard bound on descent iterations");
}

whitehead::RunConfig to_config(whitehead::Command command, const CommonFlags& flags) {
  whitehead::RunConfig config;
  config.command = command;
  if (flags.strategy == "first") {
    config.strategy = whitehead::Strategy::first();
  } else if (flags.strategy == "random") {
    config.strategy = whitehead::Strategy::random(flags.seed);
  } else {
    config.strategy = whitehead::Strategy::lex();
  }
  if (flags.format == "text") {
    config.format = whitehead::OutputFormat::Text;
  } else if (flags.format == "dot") {
    config.format = whitehead::OutputFormat::Dot;
  } else {
    config.format = whitehead::OutputFormat::Json;
  }
  config.trace = flags.trace;
  if (flags.rank >= 0) config.rank_override = static_cast<std::size_t>(flags.rank);
  if (flags.max_iters >= 0) config.max_iters = static_cast<std::size_t>(flags.max_iters);
  return config;
}

std::string gather_input(const CommonFlags& flags) {
  if (!flags.input_file.empty()) {
    std::ifstream in(flags.input_file);
    if (!in) {
      throw whitehead::ValidationError("cannot open input file: " + flags.input_file);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (!flags.input_text.empty()) return flags.input_text;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-product factorization of free groups via Whitehead graphs"};
  app.require_subcommand(1);

  CommonFlags factorize_flags, minimize_flags, subbasis_flags, graph_flags, batch_flags;
  CLI::App* factorize =
      app.add_subcommand("factorize", "atomic allotting free-product factorization");
  add_common(factorize, factorize_flags, "json");
  CLI::App* minimize = app.add_subcommand("minimize", "greedy length-minimizing basis");
  add_common(minimize, minimize_flags, "json");
  CLI::App* subbasis = app.add_subcommand("subbasis", "test whether the elements form a sub-basis");
  add_common(subbasis, subbasis_flags, "json");
  CLI::App* graph = app.add_subcommand("graph", "Whitehead graph per partition block");
  add_common(graph, graph_flags, "json");
  CLI::App* batch = app.add_subcommand("batch", "factorize each input line independently");
  add_common(batch, batch_flags, "json");

  CLI11_PARSE(app, argc, argv);

  whitehead::Command command = whitehead::Command::Factorize;
  const CommonFlags* flags = &factorize_flags;
  if (minimize->parsed()) {
    command = whitehead::Command::Minimize;
    flags = &minimize_flags;
  } else if (subbasis->parsed()) {
    command = whitehead::Command::Subbasis;
    flags = &subbasis_flags;
  } else if (graph->parsed()) {
    command = whitehead::Command::Graph;
    flags = &graph_flags;
  } else if (batch->parsed()) {
    command = whitehead::Command::Batch;
    flags = &batch_flags;
  }

  std::string input;
  try {
    input = gather_input(*flags);
  } catch (const whitehead::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  const whitehead::CliResult result = whitehead::run_command(to_config(command, *flags), input);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.error.empty()) std::cerr << result.error;
  return result.exit_code;
}

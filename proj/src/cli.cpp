#include "whitehead/cli.hpp"

#include <sstream>

#include "whitehead/io.hpp"
#include "whitehead/report.hpp"

namespace whitehead {

namespace {

using nlohmann::json;

std::string render(const json& j) { return j.dump() + "\n"; }

CliResult run_single(const RunConfig& config, const std::string& input) {
  if (config.format == OutputFormat::Dot && config.command != Command::Graph) {
    return {1, "", "dot output is only available for the graph command\n"};
  }

  const ParsedInput parsed = parse_input(input, config.rank_override);
  const BasisState basis = BasisState::standard(parsed.rank);

  switch (config.command) {
    case Command::Factorize: {
      RunOptions opts;
      opts.strategy = config.strategy;
      opts.max_iterations = config.max_iters;
      const RunResult run = cutvertex_algorithm(basis, parsed.relators, opts);
      if (config.format == OutputFormat::Text) {
        return {0, factorization_text(run), ""};
      }
      return {0, render(factorization_json(run, config.strategy, config.trace)), ""};
    }
    case Command::Minimize: {
      const MinimizeResult result = minimizing_algorithm(basis, parsed.relators);
      if (config.format == OutputFormat::Text) {
        return {0, minimize_text(result), ""};
      }
      return {0, render(minimize_json(result)), ""};
    }
    case Command::Subbasis: {
      bool any_element = false;
      bool any_class = false;
      for (const Relator& r : parsed.relators) {
        (r.is_element() ? any_element : any_class) = true;
      }
      if (any_element && any_class) {
        throw ValidationError("subbasis takes all elements or all conjugacy classes, not a mix");
      }
      const SubbasisResult result = [&] {
        if (any_class) {
          std::vector<CyclicWord> classes;
          for (const Relator& r : parsed.relators) classes.push_back(r.class_word());
          return subbasis_test_classes(classes, basis);
        }
        std::vector<Word> elements;
        for (const Relator& r : parsed.relators) elements.push_back(r.element_word());
        return subbasis_test(elements, basis);
      }();
      if (config.format == OutputFormat::Text) {
        return {0, subbasis_text(result), ""};
      }
      return {0, render(subbasis_json(result)), ""};
    }
    case Command::Graph: {
      if (config.format == OutputFormat::Dot) {
        return {0, graph_dot(basis, parsed.relators), ""};
      }
      if (config.format == OutputFormat::Text) {
        std::string out;
        const json j = graph_json(basis, parsed.relators);
        for (const json& b : j["blocks"]) {
          out += "block " + std::to_string(b["block"].get<GeneratorId>()) + ": vertices";
          for (const json& v : b["vertices"]) out += " " + v.get<std::string>();
          out += "; edges";
          for (const json& e : b["edges"]) {
            out += " " + e[0].get<std::string>() + "-" + e[1].get<std::string>();
          }
          out += "; legal cutvertices";
          if (b["legal_cutvertices"].empty()) out += " none";
          for (const json& v : b["legal_cutvertices"]) out += " " + v.get<std::string>();
          out += "\n";
        }
        return {0, out, ""};
      }
      return {0, render(graph_json(basis, parsed.relators)), ""};
    }
    case Command::Batch:
      throw InternalError("batch handled by run_command");
  }
  throw InternalError("unknown command");
}

}  // namespace

CliResult run_command(const RunConfig& config, const std::string& input) {
  try {
    if (config.command != Command::Batch) {
      return run_single(config, input);
    }
    if (config.format != OutputFormat::Json) {
      return {1, "", "batch emits JSON records; use --format json\n"};
    }
    RunConfig line_config = config;
    line_config.command = Command::Factorize;
    std::istringstream lines(input);
    std::string line;
    std::string out;
    std::size_t index = 0;
    while (std::getline(lines, line)) {
      CliResult one = run_command(line_config, line);
      if (one.exit_code == 0) {
        out += one.output;
      } else {
        std::string message = one.error;
        while (!message.empty() && message.back() == '\n') message.pop_back();
        out += render(json{{"line", index}, {"error", message}});
      }
      ++index;
    }
    return {0, out, ""};
  } catch (const ValidationError& e) {
    return {1, "", std::string(e.what()) + "\n"};
  } catch (const InternalError& e) {
    return {2, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {2, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace whitehead

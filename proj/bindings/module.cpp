// Python bindings: the CLI's operations as functions returning plain
// dicts/strings, plus a couple of word-algebra helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "whitehead/cli.hpp"
#include "whitehead/io.hpp"
#include "whitehead/report.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

whitehead::Strategy make_strategy(const std::string& name, std::uint64_t seed) {
  if (name == "lex") return whitehead::Strategy::lex();
  if (name == "first") return whitehead::Strategy::first();
  if (name == "random") return whitehead::Strategy::random(seed);
  throw whitehead::ValidationError("unknown strategy: " + name);
}

struct Parsed {
  whitehead::BasisState basis;
  std::vector<whitehead::Relator> relators;
};

Parsed parse(const std::string& text, std::optional<std::size_t> rank) {
  whitehead::ParsedInput in = whitehead::parse_input(text, rank);
  return {whitehead::BasisState::standard(in.rank), std::move(in.relators)};
}

py::object factorize(const std::string& text, std::optional<std::size_t> rank,
                     const std::string& strategy, std::uint64_t seed, bool trace,
                     std::optional<std::size_t> max_iters) {
  Parsed in = parse(text, rank);
  whitehead::RunOptions opts;
  opts.strategy = make_strategy(strategy, seed);
  opts.max_iterations = max_iters;
  const whitehead::RunResult run =
      whitehead::cutvertex_algorithm(in.basis, std::move(in.relators), opts);
  return json_to_py(whitehead::factorization_json(run, opts.strategy, trace));
}

py::object minimize(const std::string& text, std::optional<std::size_t> rank) {
  Parsed in = parse(text, rank);
  return json_to_py(
      whitehead::minimize_json(whitehead::minimizing_algorithm(in.basis, std::move(in.relators))));
}

py::object subbasis(const std::string& text, std::optional<std::size_t> rank) {
  Parsed in = parse(text, rank);
  bool any_class = false;
  for (const auto& r : in.relators) any_class = any_class || !r.is_element();
  if (any_class) {
    std::vector<whitehead::CyclicWord> classes;
    for (const auto& r : in.relators) {
      if (r.is_element()) {
        throw whitehead::ValidationError(
            "subbasis takes all elements or all conjugacy classes, not a mix");
      }
      classes.push_back(r.class_word());
    }
    return json_to_py(whitehead::subbasis_json(whitehead::subbasis_test_classes(classes, in.basis)));
  }
  std::vector<whitehead::Word> elements;
  for (const auto& r : in.relators) elements.push_back(r.element_word());
  return json_to_py(whitehead::subbasis_json(whitehead::subbasis_test(elements, in.basis)));
}

py::object graph(const std::string& text, std::optional<std::size_t> rank,
                 const std::string& format) {
  Parsed in = parse(text, rank);
  if (format == "dot") {
    return py::str(whitehead::graph_dot(in.basis, in.relators));
  }
  if (format != "json") {
    throw whitehead::ValidationError("graph format must be json or dot");
  }
  return json_to_py(whitehead::graph_json(in.basis, in.relators));
}

std::string reduce_word(const std::string& text, std::optional<std::size_t> rank) {
  Parsed in = parse(text, rank);
  if (in.relators.size() != 1 || !in.relators[0].is_element()) {
    throw whitehead::ValidationError("expected a single element word");
  }
  return whitehead::word_str(in.relators[0].element_word(), in.basis.names());
}

std::string canonical_class(const std::string& text, std::optional<std::size_t> rank) {
  Parsed in = parse(text, rank);
  if (in.relators.size() != 1) {
    throw whitehead::ValidationError("expected a single relator");
  }
  const whitehead::Relator& r = in.relators[0];
  const whitehead::CyclicWord c =
      r.is_element() ? whitehead::Relator::conj_class_of(r.element_word()).class_word()
                     : r.class_word();
  return whitehead::cyclic_str(c, in.basis.names());
}

}  // namespace

PYBIND11_MODULE(_whitehead, m) {
  m.doc() = "Free-product factorization of free groups via Whitehead graphs";

  py::register_exception<whitehead::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<whitehead::InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("factorize", &factorize, py::arg("input"), py::arg("rank") = py::none(),
        py::arg("strategy") = "lex", py::arg("seed") = 0, py::arg("trace") = false,
        py::arg("max_iters") = py::none(),
        "Atomic allotting free-product factorization report as a dict.");
  m.def("minimize", &minimize, py::arg("input"), py::arg("rank") = py::none(),
        "Greedy length-minimizing basis as a dict.");
  m.def("subbasis", &subbasis, py::arg("input"), py::arg("rank") = py::none(),
        "Sub-basis test: dict with 'subbasis' flag and a witness report.");
  m.def("graph", &graph, py::arg("input"), py::arg("rank") = py::none(),
        py::arg("format") = "json", "Whitehead graph per partition block (dict or DOT string).");
  m.def("reduce", &reduce_word, py::arg("input"), py::arg("rank") = py::none(),
        "Freely reduced form of a word.");
  m.def("canonical_class", &canonical_class, py::arg("input"), py::arg("rank") = py::none(),
        "Canonical cyclically reduced representative of a conjugacy class.");
}

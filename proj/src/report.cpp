#include "whitehead/report.hpp"

#include <algorithm>

#include "whitehead/io.hpp"

namespace whitehead {

namespace {

using nlohmann::json;

std::string vertex_str(Vertex v, std::span<const std::string> names) {
  return v.is_one() ? "1" : letter_str(v.letter(), names);
}

json plan_json(const DescentPlan& plan, std::span<const std::string> names) {
  json j;
  j["y"] = letter_str(plan.y, names);
  j["m"] = plan.m;
  j["step1_case"] = plan.step1_case == 1 ? "1.1" : "1.2";
  j["step2_case"] = plan.step2_case == 1 ? "2.1" : "2.2";
  json vi = json::array();
  for (const Vertex v : plan.v_iota) vi.push_back(vertex_str(v, names));
  json vt = json::array();
  for (const Vertex v : plan.v_tau) vt.push_back(vertex_str(v, names));
  j["v_iota"] = std::move(vi);
  j["v_tau"] = std::move(vt);
  json chi = json::object();
  chi["1"] = 0;
  for (const GeneratorId g : plan.block) {
    for (const Letter l : {Letter::positive(g), Letter::negative(g)}) {
      const Vertex v = Vertex::initial(l);
      if (v.id() < plan.chi.size() && plan.chi[v.id()] != DescentPlan::CHI_UNSET) {
        chi[letter_str(l, names)] = static_cast<int>(plan.chi[v.id()]);
      }
    }
  }
  j["chi"] = std::move(chi);
  return j;
}

json transform_json(const WhiteheadTransform& t, std::span<const std::string> names) {
  json images = json::object();
  for (GeneratorId g = 0; g < t.rank(); ++g) {
    const Word im = t.image(g);
    if (im != Word::single(Letter::positive(g))) {
      images[names[g]] = word_str(im, names);
    }
  }
  return json{{"y", letter_str(t.multiplier(), names)}, {"images", std::move(images)}};
}

json trace_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const TraceStep& step : trace) {
    const auto& names = step.names_before;
    json j;
    j["iteration"] = step.iteration;
    j["block"] = step.block_id;
    j["cutvertex"] = vertex_str(step.cutvertex, names);
    j["plan"] = plan_json(step.plan, names);
    j["transform"] = transform_json(step.transform, names);
    j["split_turns"] = step.split_turns;
    j["length_before"] = step.length_before;
    j["length_after"] = step.length_after;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

json factorization_json(const RunResult& run, const Strategy& strategy, bool include_trace) {
  const auto& names = run.basis.names();
  const auto& original = run.basis.original_names();
  json factors = json::array();
  for (const PartitionBlock& block : run.partition.blocks()) {
    json gens = json::array();
    for (const GeneratorId g : block.gens) {
      gens.push_back(json{{"name", run.basis.name(g)},
                          {"over_original", word_str(run.basis.over_original(g), original)}});
    }
    factors.push_back(json{{"block", block.id},
                           {"generators", std::move(gens)},
                           {"relators", run.allotment.fiber(block.id)}});
  }
  json allotment = json::array();
  for (std::size_t i = 0; i < run.relators.size(); ++i) {
    allotment.push_back(json{{"relator", i},
                             {"block", run.allotment.block_of(i)},
                             {"rewritten", relator_str(run.relators[i], names)}});
  }
  json j;
  j["rank"] = run.basis.rank();
  j["strategy"] = strategy.name();
  j["iterations"] = run.trace.size();
  j["initial_total_length"] = run.initial_total_length;
  j["final_total_length"] = run.final_total_length;
  j["factors"] = std::move(factors);
  j["allotment"] = std::move(allotment);
  j["rank_one_leftovers"] = run.rank_one_leftovers();
  if (include_trace) j["trace"] = trace_json(run.trace);
  return j;
}

std::string factorization_text(const RunResult& run) {
  const auto& names = run.basis.names();
  const auto& original = run.basis.original_names();
  std::string out;
  out += "factors: " + std::to_string(run.partition.block_count()) + "\n";
  for (const PartitionBlock& block : run.partition.blocks()) {
    out += "  ⟨";
    for (std::size_t i = 0; i < block.gens.size(); ++i) {
      if (i) out += ", ";
      out += word_str(run.basis.over_original(block.gens[i]), original);
    }
    out += "⟩";
    const std::vector<std::size_t> fiber = run.allotment.fiber(block.id);
    if (fiber.empty()) {
      out += "  (rank one, no relators)";
    } else {
      out += "  relators:";
      for (const std::size_t i : fiber) {
        out += " " + relator_str(run.relators[i], names);
      }
    }
    out += "\n";
  }
  out += "total length: " + std::to_string(run.initial_total_length) + " -> " +
         std::to_string(run.final_total_length) +
         ", iterations: " + std::to_string(run.trace.size()) + "\n";
  return out;
}

json minimize_json(const MinimizeResult& result) {
  const auto& original = result.basis.original_names();
  json basis = json::array();
  for (GeneratorId g = 0; g < result.basis.rank(); ++g) {
    basis.push_back(json{{"name", result.basis.name(g)},
                         {"over_original", word_str(result.basis.over_original(g), original)}});
  }
  json relators = json::array();
  for (const Relator& r : result.relators) {
    relators.push_back(relator_str(r, result.basis.names()));
  }
  return json{{"basis", std::move(basis)},
              {"relators", std::move(relators)},
              {"total_length", result.total_length},
              {"steps", result.steps}};
}

std::string minimize_text(const MinimizeResult& result) {
  const auto& original = result.basis.original_names();
  std::string out = "basis:";
  for (GeneratorId g = 0; g < result.basis.rank(); ++g) {
    out += " " + result.basis.name(g) + "=" +
           word_str(result.basis.over_original(g), original);
  }
  out += "\ntotal length: " + std::to_string(result.total_length) +
         ", steps: " + std::to_string(result.steps) + "\n";
  return out;
}

json subbasis_json(const SubbasisResult& result) {
  json j;
  j["subbasis"] = result.is_subbasis;
  j["witness"] = factorization_json(result.run, Strategy::lex(), false);
  return j;
}

std::string subbasis_text(const SubbasisResult& result) {
  std::string out = result.is_subbasis ? "subbasis: true\n" : "subbasis: false\n";
  out += factorization_text(result.run);
  return out;
}

namespace {

struct GraphBlock {
  GeneratorId id;
  std::vector<std::size_t> fiber;
  WhiteheadGraph graph;
};

std::vector<GraphBlock> graph_blocks(const BasisState& x, const std::vector<Relator>& rs) {
  std::vector<std::vector<GeneratorId>> supports;
  supports.reserve(rs.size());
  for (const Relator& r : rs) supports.push_back(r.support());
  const Partition p = finest_partition(x.rank(), supports);
  const Allotment a = allot(rs, p);
  std::vector<GraphBlock> out;
  for (const PartitionBlock& block : p.blocks()) {
    std::vector<std::size_t> fiber = a.fiber(block.id);
    if (fiber.empty()) continue;
    std::vector<Relator> block_relators;
    for (const std::size_t i : fiber) block_relators.push_back(rs[i]);
    out.push_back(GraphBlock{block.id, std::move(fiber), WhiteheadGraph::of(block_relators)});
  }
  return out;
}

}  // namespace

json graph_json(const BasisState& x, const std::vector<Relator>& rs) {
  const auto& names = x.names();
  json blocks = json::array();
  for (const GraphBlock& b : graph_blocks(x, rs)) {
    json vertices = json::array();
    for (const Vertex v : b.graph.vertices()) vertices.push_back(vertex_str(v, names));
    json edges = json::array();
    for (const Turn& t : b.graph.edges()) {
      edges.push_back(json::array({vertex_str(t.a, names), vertex_str(t.b, names)}));
    }
    json cuts = json::array();
    for (const Vertex v : b.graph.cutvertices()) cuts.push_back(vertex_str(v, names));
    json legal = json::array();
    for (const Vertex v : b.graph.legal_cutvertices()) legal.push_back(vertex_str(v, names));
    blocks.push_back(json{{"block", b.id},
                          {"relators", b.fiber},
                          {"vertices", std::move(vertices)},
                          {"edges", std::move(edges)},
                          {"cutvertices", std::move(cuts)},
                          {"legal_cutvertices", std::move(legal)}});
  }
  return json{{"blocks", std::move(blocks)}};
}

std::string graph_dot(const BasisState& x, const std::vector<Relator>& rs) {
  const auto& names = x.names();
  std::string out;
  for (const GraphBlock& b : graph_blocks(x, rs)) {
    std::string title = "block " + std::to_string(b.id) + ":";
    for (const std::size_t i : b.fiber) {
      title += " " + relator_str(rs[i], names);
    }
    out += "graph \"" + title + "\" {\n";
    for (const Vertex v : b.graph.vertices()) {
      out += "  \"" + vertex_str(v, names) + "\";\n";
    }
    for (const Turn& t : b.graph.edges()) {
      out += "  \"" + vertex_str(t.a, names) + "\" -- \"" + vertex_str(t.b, names) + "\";\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace whitehead

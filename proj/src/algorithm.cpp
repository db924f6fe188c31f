#include "whitehead/algorithm.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "whitehead/io.hpp"

namespace whitehead {

std::string Strategy::name() const {
  switch (policy) {
    case ChoicePolicy::Lex:
      return "lex";
    case ChoicePolicy::First:
      return "first";
    case ChoicePolicy::Random:
      return "random";
  }
  return "lex";
}

std::vector<GeneratorId> RunResult::rank_one_leftovers() const {
  std::set<GeneratorId> with_relator(allotment.assignment().begin(),
                                     allotment.assignment().end());
  std::vector<GeneratorId> out;
  for (const PartitionBlock& b : partition.blocks()) {
    if (!with_relator.count(b.id)) out.push_back(b.id);
  }
  return out;
}

namespace {

void validate_over_basis(const BasisState& x, std::span<const Relator> rs) {
  for (const Relator& r : rs) {
    for (const GeneratorId g : r.support()) {
      if (g >= x.rank()) {
        throw ValidationError("relator mentions a generator outside the basis");
      }
    }
  }
}

std::vector<std::vector<GeneratorId>> supports_of(std::span<const Relator> rs) {
  std::vector<std::vector<GeneratorId>> out;
  out.reserve(rs.size());
  for (const Relator& r : rs) out.push_back(r.support());
  return out;
}

struct Candidate {
  GeneratorId block_id;
  Vertex cutvertex;
};

// Expensive audits, enabled by RunOptions::check_invariants.
void audit_step(const BasisState& basis, std::span<const Relator> rewritten,
                std::span<const Relator> original) {
  if (!basis.inverse_pair_ok()) {
    throw InternalError("basis audit substitutions are no longer mutually inverse");
  }
  const Substitution down = basis.over_original_substitution();
  for (std::size_t i = 0; i < rewritten.size(); ++i) {
    if (rewritten[i].is_element() != original[i].is_element()) {
      throw InternalError("a relator changed kind during descent");
    }
    if (rewritten[i].is_element()) {
      if (down.apply(rewritten[i].element_word()) != original[i].element_word()) {
        throw InternalError("descent changed the group element of a relator");
      }
    } else {
      const Word flat = down.apply(Word(rewritten[i].class_word().letters()));
      const CyclicReduction cr = cyclically_reduce(flat);
      if (!cr.core || !(*cr.core == original[i].class_word())) {
        throw InternalError("descent changed the conjugacy class of a relator");
      }
    }
  }
}

}  // namespace

RunResult cutvertex_algorithm(const BasisState& x0, std::vector<Relator> rs,
                              const RunOptions& opts) {
  validate_over_basis(x0, rs);
  const std::vector<Relator> original = rs;
  const std::size_t initial_length = total_length(rs);
  const std::size_t bound = opts.max_iterations.value_or(std::max<std::size_t>(initial_length, 1));

  BasisState basis = x0;
  std::vector<TraceStep> trace;
  std::mt19937_64 rng(opts.strategy.seed);
  std::size_t iterations = 0;

  for (;;) {
    const auto supports = supports_of(rs);
    Partition partition = finest_partition(basis.rank(), supports);
    Allotment allotment = allot(rs, partition);

    // Per block with relators: the block graph and its legal cutvertices.
    std::vector<Candidate> candidates;
    std::optional<Candidate> chosen;
    std::vector<Relator> chosen_relators;
    WhiteheadGraph chosen_graph;
    std::vector<GeneratorId> chosen_block;

    for (const PartitionBlock& block : partition.blocks()) {
      const std::vector<std::size_t> fiber = allotment.fiber(block.id);
      if (fiber.empty()) continue;
      std::vector<Relator> block_relators;
      block_relators.reserve(fiber.size());
      for (const std::size_t i : fiber) block_relators.push_back(rs[i]);
      const WhiteheadGraph graph = WhiteheadGraph::of(block_relators);
      const std::vector<Vertex> legal = opts.strategy.policy == ChoicePolicy::First
                                            ? [&graph] {
                                                auto v = graph.cutvertices_discovery_order();
                                                std::erase_if(v, [](Vertex u) { return u.is_one(); });
                                                return v;
                                              }()
                                            : graph.legal_cutvertices();
      if (legal.empty()) continue;
      if (opts.strategy.policy == ChoicePolicy::Random) {
        for (const Vertex v : legal) candidates.push_back({block.id, v});
      } else if (!chosen) {
        // Lex: smallest block id, then smallest vertex (legal is sorted).
        // First: first block in id order, first cutvertex the DFS discovered.
        chosen = Candidate{block.id, legal.front()};
        chosen_relators = std::move(block_relators);
        chosen_graph = graph;
        chosen_block = block.gens;
      }
    }
    if (opts.strategy.policy == ChoicePolicy::Random && !candidates.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      const Candidate c = candidates[pick(rng)];
      chosen = c;
      const PartitionBlock& block = partition.block(c.block_id);
      chosen_block = block.gens;
      for (const std::size_t i : allotment.fiber(c.block_id)) chosen_relators.push_back(rs[i]);
      chosen_graph = WhiteheadGraph::of(chosen_relators);
    }

    if (!chosen) {
      RunResult result{std::move(basis),    std::move(rs),  std::move(partition),
                       std::move(allotment), std::move(trace), initial_length,
                       0};
      result.final_total_length = total_length(result.relators);
      return result;
    }

    if (++iterations > bound) {
      throw InternalError("iteration bound exceeded: descent failed to terminate");
    }

    const std::size_t length_before = total_length(rs);
    DescentPlan plan = find_descent(chosen_graph, chosen->cutvertex, chosen_block);
    validate_plan(plan, chosen_graph);
    WhiteheadTransform transform = plan_to_transform(plan, basis);

    std::vector<std::size_t> split_positions(rs.size(), 0);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      split_positions[i] = split_position_count(plan, rs[i]);
    }
    const std::size_t split_edges = split_turn_count(plan, chosen_graph);

    TransformApplication applied = apply_transform(basis, transform, rs);

    // Strict descent, relator by relator: the length falls by at least the
    // number of split positions.
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (applied.relators[i].length() + split_positions[i] > rs[i].length()) {
        throw InternalError("descent inequality violated for a relator");
      }
    }
    const std::size_t length_after = total_length(applied.relators);
    if (length_after >= length_before) {
      throw InternalError("descent did not strictly decrease the total length");
    }

    trace.push_back(TraceStep{iterations, chosen->block_id, chosen->cutvertex, std::move(plan),
                              std::move(transform), split_edges, length_before, length_after,
                              basis.names()});

    basis = std::move(applied.basis);
    rs = std::move(applied.relators);
    if (opts.check_invariants) {
      audit_step(basis, rs, original);
    }
  }
}

MinimizeResult minimizing_algorithm(const BasisState& x0, std::vector<Relator> rs) {
  validate_over_basis(x0, rs);
  const std::vector<WhiteheadTransform> transforms = enumerate_transforms(x0.rank());
  BasisState basis = x0;
  std::size_t steps = 0;
  const std::size_t hard_bound = std::max<std::size_t>(total_length(rs), 1);

  for (;;) {
    const std::size_t current = total_length(rs);
    bool improved = false;
    for (const WhiteheadTransform& t : transforms) {
      if (t.is_identity()) continue;
      const Substitution inverse = t.inverse_images();
      std::size_t candidate = 0;
      for (const Relator& r : rs) {
        candidate += substitute(r, inverse).length();
        if (candidate >= current) break;
      }
      if (candidate < current) {
        TransformApplication applied = apply_transform(basis, t, rs);
        basis = std::move(applied.basis);
        rs = std::move(applied.relators);
        improved = true;
        break;
      }
    }
    if (!improved) break;
    if (++steps > hard_bound) {
      throw InternalError("minimizing descent failed to terminate");
    }
  }
  const std::size_t final_length = total_length(rs);
  return MinimizeResult{std::move(basis), std::move(rs), final_length, steps};
}

namespace {

SubbasisResult subbasis_from_run(RunResult run) {
  std::set<GeneratorId> gens;
  bool ok = true;
  for (const Relator& r : run.relators) {
    if (r.length() != 1) {
      ok = false;
      break;
    }
    const Letter l =
        r.is_element() ? r.element_word().at(0) : r.class_word().letters().front();
    if (!gens.insert(l.gen()).second) {
      ok = false;  // repeated generator, including opposite-sign pairs
      break;
    }
  }
  return SubbasisResult{ok, std::move(run)};
}

}  // namespace

SubbasisResult subbasis_test(std::span<const Word> elements, const BasisState& x0) {
  std::vector<Relator> rs;
  rs.reserve(elements.size());
  for (const Word& w : elements) {
    if (w.empty()) throw ValidationError("sub-basis candidates must be nontrivial");
    rs.push_back(Relator::element(w));
  }
  return subbasis_from_run(cutvertex_algorithm(x0, std::move(rs)));
}

SubbasisResult subbasis_test_classes(std::span<const CyclicWord> classes, const BasisState& x0) {
  std::vector<Relator> rs;
  rs.reserve(classes.size());
  for (const CyclicWord& c : classes) rs.push_back(Relator::conj_class(c));
  return subbasis_from_run(cutvertex_algorithm(x0, std::move(rs)));
}

Word rewrite_over_final(const Word& w_over_original, const RunResult& run) {
  return run.basis.original_over_current().apply(w_over_original);
}

}  // namespace whitehead

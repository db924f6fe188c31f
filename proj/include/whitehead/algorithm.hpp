#ifndef WHITEHEAD_ALGORITHM_HPP_
#define WHITEHEAD_ALGORITHM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "whitehead/basis.hpp"
#include "whitehead/descent.hpp"
#include "whitehead/graph.hpp"
#include "whitehead/partition.hpp"
#include "whitehead/transform.hpp"
#include "whitehead/word.hpp"

namespace whitehead {

/// How the main loop picks a block and a legal cutvertex when several are
/// available. All policies yield the same factorization up to conjugacy;
/// lex is the reproducible default.
enum class ChoicePolicy { Lex, First, Random };

struct Strategy {
  ChoicePolicy policy = ChoicePolicy::Lex;
  std::uint64_t seed = 0;

  static Strategy lex() { return {ChoicePolicy::Lex, 0}; }
  static Strategy first() { return {ChoicePolicy::First, 0}; }
  static Strategy random(std::uint64_t seed) { return {ChoicePolicy::Random, seed}; }
  std::string name() const;
};

struct RunOptions {
  Strategy strategy{};
  /// Hard iteration bound; hitting it raises InternalError. Defaults to the
  /// initial total length, which strict descent can never exceed.
  std::optional<std::size_t> max_iterations{};
  /// Re-derive every relator through the basis audit after each step and
  /// check the audit substitutions stay mutually inverse. For tests.
  bool check_invariants = false;
};

/// One applied descent, with the basis names current when it ran.
struct TraceStep {
  std::size_t iteration = 0;
  GeneratorId block_id = 0;
  Vertex cutvertex = Vertex::one();
  DescentPlan plan;
  WhiteheadTransform transform;
  std::size_t split_turns = 0;  // chi-split edges of the block graph
  std::size_t length_before = 0;
  std::size_t length_after = 0;
  std::vector<std::string> names_before;
};

struct RunResult {
  BasisState basis;
  std::vector<Relator> relators;  // rewritten over the final basis
  Partition partition;
  Allotment allotment;
  std::vector<TraceStep> trace;
  std::size_t initial_total_length = 0;
  std::size_t final_total_length = 0;

  /// Blocks with no allotted relator; each has a single generator.
  std::vector<GeneratorId> rank_one_leftovers() const;
};

/// The cutvertex algorithm: repeatedly split the basis along the finest
/// support partition, find a legal cutvertex in some block's Whitehead
/// graph, and apply the descent transform, until no block has one. The
/// output partition is an atomic allotting factorization and every block
/// graph is free of legal cutvertices.
RunResult cutvertex_algorithm(const BasisState& x0, std::vector<Relator> rs,
                              const RunOptions& opts = {});

struct MinimizeResult {
  BasisState basis;
  std::vector<Relator> relators;
  std::size_t total_length = 0;
  std::size_t steps = 0;
};

/// Greedy length descent over all Whitehead transforms: applies the first
/// strictly decreasing transform in enumeration order until none exists.
/// Never accepts equal-length moves, so it terminates; the result is a
/// basis at which no single transform shortens R.
MinimizeResult minimizing_algorithm(const BasisState& x0, std::vector<Relator> rs);

struct SubbasisResult {
  bool is_subbasis = false;
  RunResult run;
};

/// Whether the given elements extend to a basis: runs the cutvertex
/// algorithm and accepts iff every element rewrites to a single letter over
/// pairwise distinct generators.
SubbasisResult subbasis_test(std::span<const Word> elements, const BasisState& x0);

/// Class variant: every class must rewrite to a length-1 cyclic word over
/// pairwise distinct generators.
SubbasisResult subbasis_test_classes(std::span<const CyclicWord> classes, const BasisState& x0);

/// Image of an original-basis word over the run's final basis; inverse to
/// expanding through over_original.
Word rewrite_over_final(const Word& w_over_original, const RunResult& run);

}  // namespace whitehead

#endif  // WHITEHEAD_ALGORITHM_HPP_

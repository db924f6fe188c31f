// Test-only oracles: brute-force counterparts of the production algorithms,
// kept independent of the code paths they check.

#ifndef WHITEHEAD_TESTS_ORACLES_HPP_
#define WHITEHEAD_TESTS_ORACLES_HPP_

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "whitehead/algorithm.hpp"
#include "whitehead/descent.hpp"
#include "whitehead/graph.hpp"
#include "whitehead/word.hpp"

namespace whtest {

using namespace whitehead;

/// Cutvertices by the definition: v such that the other vertices split into
/// two nonempty parts with no edge between them. Tries every bipartition.
std::vector<Vertex> bipartition_cutvertices(const WhiteheadGraph& g);
bool is_cutvertex_by_bipartition(const WhiteheadGraph& g, Vertex v);

/// All set partitions of {0..rank-1}, each as sorted blocks sorted by
/// smallest member.
std::vector<std::vector<std::vector<GeneratorId>>> all_partitions(std::size_t rank);

struct DescentSearch {
  std::size_t min_length = 0;
  std::set<std::size_t> factor_counts_at_min;  // finest-partition block counts
};

/// Minimum total length over every Whitehead-transform sequence of length
/// at most depth, by breadth-first search with state deduplication.
DescentSearch exhaustive_descent(std::size_t rank, const std::vector<Relator>& rs,
                                 std::size_t depth);

/// Rewrites one relator along a descent plan by the per-position case
/// analysis (drop the position when its boundary turn is split through the
/// vertex of y, otherwise emit the image letter). Verifies the per-position
/// identities as it goes and returns the rewritten relator.
Relator rewrite_by_cases(const Relator& r, const DescentPlan& plan,
                         const WhiteheadTransform& t);

// Seeded random inputs.
Letter random_letter(std::mt19937_64& rng, std::size_t rank);
Word random_reduced_word(std::mt19937_64& rng, std::size_t rank, std::size_t length);
CyclicWord random_cyclic_word(std::mt19937_64& rng, std::size_t rank, std::size_t length);
WhiteheadTransform random_transform(std::mt19937_64& rng, std::size_t rank);

struct RandomRelatorParams {
  std::size_t max_rank = 5;
  std::size_t max_count = 6;
  std::size_t max_total_length = 100;
};

struct RandomInput {
  std::size_t rank = 1;
  std::vector<Relator> relators;
};

RandomInput random_relators(std::mt19937_64& rng, const RandomRelatorParams& params);

}  // namespace whtest

#endif  // WHITEHEAD_TESTS_ORACLES_HPP_

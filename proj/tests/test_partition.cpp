#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "whitehead/io.hpp"
#include "whitehead/partition.hpp"

using namespace whitehead;

namespace {

using Supports = std::vector<std::vector<GeneratorId>>;

std::vector<std::vector<GeneratorId>> blocks_of(const Partition& p) {
  std::vector<std::vector<GeneratorId>> out;
  for (const PartitionBlock& b : p.blocks()) out.push_back(b.gens);
  return out;
}

bool respects(const std::vector<std::vector<GeneratorId>>& blocks, const Supports& supports) {
  for (const auto& s : supports) {
    bool inside_some = s.empty();
    for (const auto& block : blocks) {
      if (std::includes(block.begin(), block.end(), s.begin(), s.end())) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return false;
  }
  return true;
}

// p refines q: every p-block sits inside a q-block.
bool refines(const std::vector<std::vector<GeneratorId>>& p,
             const std::vector<std::vector<GeneratorId>>& q) {
  for (const auto& pb : p) {
    bool inside_some = false;
    for (const auto& qb : q) {
      if (std::includes(qb.begin(), qb.end(), pb.begin(), pb.end())) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("finest partition merges supports") {
  CHECK(blocks_of(finest_partition(3, Supports{{0, 1}})) ==
        std::vector<std::vector<GeneratorId>>{{0, 1}, {2}});
  CHECK(blocks_of(finest_partition(3, Supports{{0, 1}, {1, 2}})) ==
        std::vector<std::vector<GeneratorId>>{{0, 1, 2}});
  CHECK(blocks_of(finest_partition(2, Supports{})) ==
        std::vector<std::vector<GeneratorId>>{{0}, {1}});
}

TEST_CASE("finest partition is finest among respecting partitions") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 120; ++i) {
    const std::size_t rank = 1 + rng() % 5;
    Supports supports;
    const std::size_t count = rng() % 4;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<GeneratorId> s;
      for (GeneratorId g = 0; g < rank; ++g) {
        if (rng() % 3 == 0) s.push_back(g);
      }
      if (s.empty()) s.push_back(static_cast<GeneratorId>(rng() % rank));
      supports.push_back(std::move(s));
    }
    const auto fine = blocks_of(finest_partition(rank, supports));
    CHECK(respects(fine, supports));
    for (const auto& candidate : whtest::all_partitions(rank)) {
      if (respects(candidate, supports)) {
        CHECK(refines(fine, candidate));
      }
    }

    // Independent of support order and duplicates.
    Supports shuffled = supports;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.insert(shuffled.end(), supports.begin(), supports.end());
    CHECK(blocks_of(finest_partition(rank, shuffled)) == fine);
  }
}

TEST_CASE("allotment") {
  const ParsedInput in = parse_input("ab c", 3);
  const Partition p = finest_partition(3, Supports{{0, 1}, {2}});
  const Allotment alloc = allot(in.relators, p);
  CHECK(alloc.block_of(0) == 0);
  CHECK(alloc.block_of(1) == 2);
  CHECK(alloc.fiber(0) == std::vector<std::size_t>{0});
  CHECK(alloc.fiber(2) == std::vector<std::size_t>{1});

  CHECK(allot(std::vector<Relator>{}, p).size() == 0);

  // A support straddling blocks is a usage error.
  const Partition fine = finest_partition(2, Supports{});
  const ParsedInput straddle = parse_input("ab", 2);
  CHECK_THROWS_AS(allot(straddle.relators, fine), ValidationError);

  // Fibers partition the relator index set and respect supports.
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const whtest::RandomInput input = whtest::random_relators(
        rng, whtest::RandomRelatorParams{4, 5, 20});
    Supports supports;
    for (const Relator& r : input.relators) supports.push_back(r.support());
    const Partition part = finest_partition(input.rank, supports);
    const Allotment al = allot(input.relators, part);
    std::size_t covered = 0;
    for (const PartitionBlock& block : part.blocks()) {
      for (const std::size_t idx : al.fiber(block.id)) {
        ++covered;
        const auto supp = input.relators[idx].support();
        CHECK(std::includes(block.gens.begin(), block.gens.end(), supp.begin(), supp.end()));
      }
    }
    CHECK(covered == input.relators.size());
  }
}

TEST_CASE("atom detection") {
  CHECK(is_atom(2, parse_input("ab", 2).relators));
  CHECK_FALSE(is_atom(2, parse_input("a", 2).relators));
  CHECK(is_atom(1, std::vector<Relator>{}));
}

#include "whitehead/partition.hpp"

#include <algorithm>
#include <map>

namespace whitehead {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<GeneratorId>(i);
  }
  GeneratorId find(GeneratorId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(GeneratorId a, GeneratorId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller id as the root so block ids come out deterministic.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<GeneratorId> parent_;
};

}  // namespace

Partition::Partition(std::size_t rank, std::vector<PartitionBlock> blocks)
    : blocks_(std::move(blocks)), block_of_(rank, 0) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](const PartitionBlock& a, const PartitionBlock& b) { return a.id < b.id; });
  std::vector<char> seen(rank, 0);
  for (const PartitionBlock& b : blocks_) {
    if (b.gens.empty() || b.id != b.gens.front()) {
      throw InternalError("malformed partition block");
    }
    for (const GeneratorId g : b.gens) {
      if (g >= rank || seen[g]) throw InternalError("partition does not partition the basis");
      seen[g] = 1;
      block_of_[g] = b.id;
    }
  }
  for (const char s : seen) {
    if (!s) throw InternalError("partition does not cover the basis");
  }
}

GeneratorId Partition::block_of(GeneratorId g) const {
  if (g >= block_of_.size()) throw ValidationError("generator outside basis");
  return block_of_[g];
}

const PartitionBlock& Partition::block(GeneratorId block_id) const {
  for (const PartitionBlock& b : blocks_) {
    if (b.id == block_id) return b;
  }
  throw InternalError("no such partition block");
}

Partition finest_partition(std::size_t rank,
                           std::span<const std::vector<GeneratorId>> supports) {
  UnionFind uf(rank);
  for (const auto& s : supports) {
    if (s.empty()) continue;
    for (const GeneratorId g : s) {
      if (g >= rank) throw ValidationError("support mentions a generator outside the basis");
      uf.unite(s.front(), g);
    }
  }
  std::map<GeneratorId, std::vector<GeneratorId>> groups;
  for (GeneratorId g = 0; g < rank; ++g) groups[uf.find(g)].push_back(g);
  std::vector<PartitionBlock> blocks;
  blocks.reserve(groups.size());
  for (auto& [root, gens] : groups) {
    blocks.push_back(PartitionBlock{gens.front(), std::move(gens)});
  }
  return Partition(rank, std::move(blocks));
}

std::vector<std::size_t> Allotment::fiber(GeneratorId block_id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < block_of_relator_.size(); ++i) {
    if (block_of_relator_[i] == block_id) out.push_back(i);
  }
  return out;
}

Allotment allot(std::span<const Relator> rs, const Partition& p) {
  std::vector<GeneratorId> assignment;
  assignment.reserve(rs.size());
  for (const Relator& r : rs) {
    const std::vector<GeneratorId> supp = r.support();
    const GeneratorId block = p.block_of(supp.front());
    for (const GeneratorId g : supp) {
      if (p.block_of(g) != block) {
        throw ValidationError("relator support straddles partition blocks");
      }
    }
    assignment.push_back(block);
  }
  return Allotment(std::move(assignment));
}

bool is_atom(std::size_t rank, std::span<const Relator> rs) {
  if (rank == 0) throw ValidationError("rank must be at least 1");
  std::vector<std::vector<GeneratorId>> supports;
  supports.reserve(rs.size());
  for (const Relator& r : rs) supports.push_back(r.support());
  return finest_partition(rank, supports).block_count() == 1;
}

}  // namespace whitehead

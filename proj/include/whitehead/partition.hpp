#ifndef WHITEHEAD_PARTITION_HPP_
#define WHITEHEAD_PARTITION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "whitehead/word.hpp"

namespace whitehead {

/// One block of a basis partition. The block id is the smallest generator
/// id it contains, which makes reports reproducible.
struct PartitionBlock {
  GeneratorId id;
  std::vector<GeneratorId> gens;  // sorted
};

class Partition {
 public:
  Partition(std::size_t rank, std::vector<PartitionBlock> blocks);

  std::size_t rank() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }
  GeneratorId block_of(GeneratorId g) const;
  const PartitionBlock& block(GeneratorId block_id) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<PartitionBlock> blocks_;   // sorted by id
  std::vector<GeneratorId> block_of_;    // gen -> block id
};

/// The finest partition of {0..rank-1} with every support inside one block:
/// singletons merged along the supports by union-find.
Partition finest_partition(std::size_t rank, std::span<const std::vector<GeneratorId>> supports);

/// Per-relator block assignment.
class Allotment {
 public:
  explicit Allotment(std::vector<GeneratorId> block_of_relator)
      : block_of_relator_(std::move(block_of_relator)) {}

  std::size_t size() const { return block_of_relator_.size(); }
  GeneratorId block_of(std::size_t relator_index) const { return block_of_relator_[relator_index]; }
  const std::vector<GeneratorId>& assignment() const { return block_of_relator_; }

  /// Relator indices allotted to the given block, ascending.
  std::vector<std::size_t> fiber(GeneratorId block_id) const;

 private:
  std::vector<GeneratorId> block_of_relator_;
};

/// Assigns each relator the block containing its support. Throws
/// ValidationError when a support straddles blocks, which means p does not
/// respect the supports.
Allotment allot(std::span<const Relator> rs, const Partition& p);

/// True iff the finest partition over the supports of R has a single block.
bool is_atom(std::size_t rank, std::span<const Relator> rs);

}  // namespace whitehead

#endif  // WHITEHEAD_PARTITION_HPP_

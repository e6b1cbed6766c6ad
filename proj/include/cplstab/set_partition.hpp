#pragma once

#include <vector>

#include "cplstab/partition.hpp"

namespace cplstab {

/// Unordered set partition of {1,...,r}, stored in canonical form:
/// each block sorted ascending, blocks ordered by size descending then
/// smallest element ascending. Equality is equality of canonical forms.
class SetPartition {
 public:
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int ground_size() const;          // r
  Partition type() const;           // partition of block sizes

  bool operator==(const SetPartition& other) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

// All set partitions of {1,...,r} whose block-size multiset equals pi.
// Requires |pi| = r. Each partition appears exactly once.
std::vector<SetPartition> set_partitions_of_type(int r, const Partition& pi);

}  // namespace cplstab

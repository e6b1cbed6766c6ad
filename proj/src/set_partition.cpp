#include "cplstab/set_partition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cplstab {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("set partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (!seen.insert(e).second) throw std::invalid_argument("set partition blocks must be disjoint");
    }
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

int SetPartition::ground_size() const {
  int r = 0;
  for (const auto& b : blocks_) r += static_cast<int>(b.size());
  return r;
}

Partition SetPartition::type() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return Partition(std::move(sizes));
}

namespace {

// Fix the block containing the least unused element; choose its size among
// the distinct sizes still owed and its companions among the larger unused
// elements. Each unordered set partition is produced exactly once.
void emit_typed(std::vector<int>& unused, std::vector<int>& sizes,
                std::vector<std::vector<int>>& acc, std::vector<SetPartition>& out) {
  if (unused.empty()) {
    out.push_back(SetPartition(acc));
    return;
  }
  int head = unused.front();
  int prev_size = -1;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    int s = sizes[si];
    if (s == prev_size) continue;
    prev_size = s;
    std::vector<int> rest(unused.begin() + 1, unused.end());
    std::vector<int> pick(static_cast<std::size_t>(s) - 1);
    // choose s-1 companions from rest, in increasing index order
    std::vector<int> idx(static_cast<std::size_t>(s) - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    if (idx.size() > rest.size()) continue;
    while (true) {
      std::vector<int> block{head};
      for (std::size_t i = 0; i < idx.size(); ++i) block.push_back(rest[idx[i]]);
      std::vector<int> remaining;
      std::size_t j = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (j < idx.size() && static_cast<int>(i) == idx[j]) {
          ++j;
        } else {
          remaining.push_back(rest[i]);
        }
      }
      std::vector<int> remaining_sizes = sizes;
      remaining_sizes.erase(remaining_sizes.begin() + static_cast<long>(si));
      acc.push_back(std::move(block));
      emit_typed(remaining, remaining_sizes, acc, out);
      acc.pop_back();

      // next combination of indices
      int k = static_cast<int>(idx.size()) - 1;
      while (k >= 0 && idx[k] == static_cast<int>(rest.size()) - static_cast<int>(idx.size()) + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t i = k + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace

std::vector<SetPartition> set_partitions_of_type(int r, const Partition& pi) {
  if (r < 0 || pi.weight() != r) {
    throw std::invalid_argument("set partition type must have weight r");
  }
  std::vector<int> unused(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) unused[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> sizes = pi.parts();
  std::vector<std::vector<int>> acc;
  std::vector<SetPartition> out;
  emit_typed(unused, sizes, acc, out);
  return out;
}

}  // namespace cplstab

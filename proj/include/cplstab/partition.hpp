#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cplstab {

/// Integer partition: a finite weakly decreasing list of positive parts.
/// The empty list is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  long weight() const;              // |lambda|
  int support() const { return static_cast<int>(parts_.size()); }
  int mult(int j) const;            // m_j, number of parts equal to j
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  int part(int i) const;            // lambda_i, 1-indexed, 0 past the support

  bool fits_in_box(int rows, int cols) const;

  Partition with_part(int part) const;              // multiset insert, part > 0
  Partition union_with(const Partition& other) const;
  Partition minus(const Partition& sub) const;      // multiset difference; sub must fit

  bool operator==(const Partition& other) const = default;

  std::string str() const;                          // "2,1"; "" for the empty partition
  static Partition parse(std::string_view s);

 private:
  std::vector<int> parts_;
};

// Canonical order used for all enumerations and serialized term lists:
// by weight, then lexicographically with the larger first part first
// (so (2) precedes (1,1)).
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionCanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

// All partitions fitting an a x b box (at most a parts, each at most b),
// in canonical order.
std::vector<Partition> partitions_in_box(int a, int b);

// All partitions of d, in canonical order. Cached.
const std::vector<Partition>& partitions_of(int d);

// p(d), computed by Euler's pentagonal recurrence (independent of the
// enumeration above).
long long partition_count(int d);

}  // namespace cplstab

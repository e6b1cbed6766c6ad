#include "cplstab/partition.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cplstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

long Partition::weight() const {
  long w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::mult(int j) const {
  int m = 0;
  for (int p : parts_) m += (p == j);
  return m;
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition parts are 1-indexed");
  return i <= support() ? parts_[i - 1] : 0;
}

bool Partition::fits_in_box(int rows, int cols) const {
  return support() <= rows && first() <= cols;
}

Partition Partition::with_part(int part) const {
  if (part <= 0) throw std::invalid_argument("partition parts must be positive");
  Partition r = *this;
  auto it = std::lower_bound(r.parts_.begin(), r.parts_.end(), part, std::greater<int>());
  r.parts_.insert(it, part);
  return r;
}

Partition Partition::union_with(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<int>());
  Partition r;
  r.parts_ = std::move(merged);
  return r;
}

Partition Partition::minus(const Partition& sub) const {
  std::vector<int> rest;
  rest.reserve(parts_.size());
  std::size_t j = 0;
  for (int p : parts_) {
    if (j < sub.parts_.size() && sub.parts_[j] == p) {
      ++j;
    } else {
      rest.push_back(p);
    }
  }
  if (j != sub.parts_.size()) throw std::invalid_argument("not a sub-multiset");
  Partition r;
  r.parts_ = std::move(rest);
  return r;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view s) {
  std::vector<int> parts;
  if (s.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed partition: " + std::string(s));
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed partition: " + std::string(s));
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw std::invalid_argument("partition part out of range");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));  // validates ordering and positivity
}

bool canonical_less(const Partition& a, const Partition& b) {
  long wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.parts() > b.parts();
}

namespace {

void emit_box(int rows, int cols, int max_part, std::vector<int>& acc,
              std::vector<Partition>& out) {
  out.push_back(Partition(acc));
  if (static_cast<int>(acc.size()) == rows) return;
  for (int p = std::min(cols, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit_box(rows, cols, p, acc, out);
    acc.pop_back();
  }
}

void emit_exact(int remaining, int max_part, std::vector<int>& acc,
                std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    acc.push_back(p);
    emit_exact(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("box dimensions must be non-negative");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_box(a, b, b, acc, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

const std::vector<Partition>& partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partition weight must be non-negative");
  static std::mutex mu;
  static std::vector<std::vector<Partition>> cache;
  std::scoped_lock lock(mu);
  while (static_cast<int>(cache.size()) <= d) {
    int n = static_cast<int>(cache.size());
    std::vector<Partition> exact;
    std::vector<int> acc;
    emit_exact(n, n, acc, exact);
    std::sort(exact.begin(), exact.end(), canonical_less);
    cache.push_back(std::move(exact));
  }
  return cache[d];
}

long long partition_count(int d) {
  if (d < 0) return 0;
  static std::mutex mu;
  static std::vector<long long> p{1};
  std::scoped_lock lock(mu);
  while (static_cast<int>(p.size()) <= d) {
    int n = static_cast<int>(p.size());
    long long v = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) v += sign * p[n - g1];
      if (g2 <= n) v += sign * p[n - g2];
    }
    p.push_back(v);
  }
  return p[d];
}

}  // namespace cplstab

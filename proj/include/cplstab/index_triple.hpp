#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cplstab/partition.hpp"

namespace cplstab {

/// Basis index (n, k, lambda): valid when n >= k >= 0 and lambda fits
/// the (n-k) x k box. Serialized as "n:k:lambda", e.g. "4:2:2,1".
struct IndexTriple {
  int n = 0;
  int k = 0;
  Partition lam;

  bool valid() const;
  int m0() const { return n - k - lam.support(); }

  bool operator==(const IndexTriple& other) const = default;

  std::string str() const;
  static IndexTriple parse(std::string_view s);
};

// Throws std::invalid_argument unless xi.valid().
void require_member(const IndexTriple& xi);

// (n, k, lambda) -> (n, k, lambda^c), the box complement. An involution.
IndexTriple complement(const IndexTriple& xi);

// Index embedding into the next module of the chain: (n,k,lambda) -> (n+2,k+1,lambda).
IndexTriple embed_next(const IndexTriple& xi);

// |lambda| <= min(n-k, k) for even n, <= min(n-k, k-1) for odd n.
bool is_stable(const IndexTriple& xi);

// All triples with first component n, ordered by k then lambda (canonical).
std::vector<IndexTriple> enum_triples(int n);

// Triples (n,k,lambda) with k - n/2 = j and |lambda| = d; n must be even.
std::vector<IndexTriple> enum_triples_mu(int j, int d, int n);

}  // namespace cplstab

#include "cplstab/index_triple.hpp"

#include <algorithm>
#include <stdexcept>

namespace cplstab {

bool IndexTriple::valid() const {
  return n >= k && k >= 0 && lam.fits_in_box(n - k, k);
}

std::string IndexTriple::str() const {
  return std::to_string(n) + ":" + std::to_string(k) + ":" + lam.str();
}

IndexTriple IndexTriple::parse(std::string_view s) {
  std::size_t c1 = s.find(':');
  std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos : s.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
      s.find(':', c2 + 1) != std::string_view::npos) {
    throw std::invalid_argument("malformed index triple (expected n:k:lambda): " + std::string(s));
  }
  auto parse_int = [&](std::string_view tok) {
    if (tok.empty()) throw std::invalid_argument("malformed index triple: " + std::string(s));
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed index triple: " + std::string(s));
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw std::invalid_argument("index triple component out of range");
    }
    return v;
  };
  IndexTriple xi;
  xi.n = parse_int(s.substr(0, c1));
  xi.k = parse_int(s.substr(c1 + 1, c2 - c1 - 1));
  xi.lam = Partition::parse(s.substr(c2 + 1));
  return xi;
}

void require_member(const IndexTriple& xi) {
  if (!xi.valid()) {
    throw std::invalid_argument("index triple " + xi.str() +
                                " is not valid (need n >= k >= 0 and lambda in the (n-k) x k box)");
  }
}

IndexTriple complement(const IndexTriple& xi) {
  require_member(xi);
  int s = xi.lam.support();
  std::vector<int> parts;
  for (int i = 0; i < xi.n - xi.k - s; ++i) parts.push_back(xi.k);
  for (int i = s; i >= 1; --i) {
    int v = xi.k - xi.lam.part(i);
    if (v > 0) parts.push_back(v);
  }
  return IndexTriple{xi.n, xi.k, Partition(std::move(parts))};
}

IndexTriple embed_next(const IndexTriple& xi) {
  require_member(xi);
  return IndexTriple{xi.n + 2, xi.k + 1, xi.lam};
}

bool is_stable(const IndexTriple& xi) {
  require_member(xi);
  long bound = (xi.n % 2 == 0) ? std::min(xi.n - xi.k, xi.k) : std::min(xi.n - xi.k, xi.k - 1);
  return xi.lam.weight() <= bound;
}

std::vector<IndexTriple> enum_triples(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<IndexTriple> out;
  for (int k = 0; k <= n; ++k) {
    for (auto& lam : partitions_in_box(n - k, k)) {
      out.push_back(IndexTriple{n, k, std::move(lam)});
    }
  }
  return out;
}

std::vector<IndexTriple> enum_triples_mu(int j, int d, int n) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("enum_triples_mu requires even n");
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  std::vector<IndexTriple> out;
  int k = n / 2 + j;
  if (k < 0 || k > n) return out;
  for (auto& lam : partitions_in_box(n - k, k)) {
    if (lam.weight() == d) out.push_back(IndexTriple{n, k, std::move(lam)});
  }
  return out;
}

}  // namespace cplstab

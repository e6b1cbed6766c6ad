#include "cplstab/cpl.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "cplstab/fkops.hpp"

namespace cplstab {

Normalization normalization(const IndexTriple& xi) {
  require_member(xi);
  Normalization norm;
  norm.m.assign(static_cast<std::size_t>(xi.k) + 1, 0);
  norm.m[0] = xi.m0();
  for (int j = 1; j <= xi.k; ++j) norm.m[static_cast<std::size_t>(j)] = xi.lam.mult(j);
  int exponent = xi.n / 4 - (xi.n - xi.k) / 2;
  norm.eps = (exponent % 2 == 0) ? 1 : -1;
  Int denom = 1;
  for (int m : norm.m) denom *= factorial(static_cast<unsigned long>(m));
  norm.z = Rat(norm.eps) / Rat(denom);
  return norm;
}

const FockVector& weyl_generator(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  static std::mutex mu;
  static std::map<int, FockVector> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    FockVector w = (n % 2 == 0)
        ? apply_word({{gen_x(-n / 2), static_cast<unsigned>(n / 2)}},
                     highest_weight_vector_even())
        : apply_word({{gen_x(-(n + 1) / 2), static_cast<unsigned>((n - 1) / 2)}},
                     highest_weight_vector_odd());
    it = cache.emplace(n, std::move(w)).first;
  }
  return it->second;
}

FockVector basis_b(const IndexTriple& xi) {
  require_member(xi);
  FockVector v = weyl_generator(xi.n);
  for (int i = 1; i <= xi.n - xi.k; ++i) {
    v = act(gen_y(xi.lam.part(i)), v);
  }
  return v;
}

FockVector basis_cl(const IndexTriple& xi) {
  Normalization norm = normalization(xi);
  const FockVector& w = weyl_generator(xi.n);

  FockVector plain = w;
  for (int i = 1; i <= xi.n - xi.k; ++i) {
    plain = act(gen_y(xi.k - xi.lam.part(i)), plain);
  }
  plain *= norm.z;

  // same vector through divided powers: eps * y^{(m_k)} (y t)^{(m_{k-1})}
  // ... (y t^k)^{(m_0)} w_n
  std::vector<WordFactor> word;
  for (int j = xi.k; j >= 0; --j) {
    unsigned power = static_cast<unsigned>(norm.m[static_cast<std::size_t>(j)]);
    if (power > 0) word.push_back(WordFactor{gen_y(xi.k - j), power});
  }
  FockVector divided = apply_word(word, w) * Rat(norm.eps);

  if (!(plain == divided)) {
    throw std::runtime_error("normalization bookkeeping mismatch for " + xi.str());
  }
  return plain;
}

const FockVector& lowest_weight_generator(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  static std::mutex mu;
  static std::map<int, FockVector> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    FockVector v = (n % 2 == 0)
        ? apply_word({{gen_y(-n / 2), static_cast<unsigned>(n / 2)}},
                     highest_weight_vector_even())
        : intertwiner_G_odd(weyl_generator(n));
    it = cache.emplace(n, std::move(v)).first;
  }
  return it->second;
}

FockVector basis_bbar(const IndexTriple& xi) {
  require_member(xi);
  if (xi.n % 2 == 0) {
    FockVector v = lowest_weight_generator(xi.n);
    for (int i = 1; i <= xi.n - xi.k; ++i) {
      v = act(gen_x(xi.lam.part(i)), v);
    }
    return v;
  }
  return intertwiner_G_odd(basis_b(xi));
}

}  // namespace cplstab

#include "cplstab/straighten.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cplstab {

Rat coeff_C(const Partition& pi) {
  Int r = 1;
  for (int part : pi.parts()) {
    r *= factorial(static_cast<unsigned long>(part));
    r *= factorial(static_cast<unsigned long>(part - 1));
  }
  return Rat(r);
}

Rat coeff_Cprime(const Partition& pi) {
  Int r = 1;
  for (int part : pi.parts()) r *= factorial(static_cast<unsigned long>(part - 1));
  return Rat(r);
}

namespace {

[[noreturn]] void throw_block_sum(long sum) {
  throw std::invalid_argument(
      "straightening hypothesis (1) violated: block sum " + std::to_string(sum) +
      " is not negative, the monomial leaves the creation subalgebra");
}

std::string index_set_str(std::span<const int> idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s + "}";
}

}  // namespace

HeisenbergPoly block_monomial(const SetPartition& B, std::span<const int> sigma,
                              std::span<const int> p, std::span<const int> q) {
  if (p.size() != q.size() || sigma.size() != p.size() ||
      B.ground_size() != static_cast<int>(p.size())) {
    throw std::invalid_argument("block_monomial arity mismatch");
  }
  std::vector<int> parts;
  for (const auto& block : B.blocks()) {
    long sum = 0;
    for (int i : block) sum += p[i - 1] - q[sigma[i - 1]];
    if (sum >= 0) throw_block_sum(sum);
    parts.push_back(static_cast<int>(-sum));
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return HeisenbergPoly::monomial(Partition(std::move(parts)));
}

HeisenbergPoly h_sum_pq_naive(const Partition& pi, std::span<const int> p,
                              std::span<const int> q) {
  int r = static_cast<int>(p.size());
  if (pi.weight() != r || q.size() != p.size()) {
    throw std::invalid_argument("h_sum_pq arity mismatch");
  }
  Rat prefactor = 1;
  for (int part : pi.parts()) prefactor /= Rat(factorial(static_cast<unsigned long>(part)));

  HeisenbergPoly out;
  std::vector<int> sigma(static_cast<std::size_t>(r));
  for (const SetPartition& B : set_partitions_of_type(r, pi)) {
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      out += block_monomial(B, sigma, p, q);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out * prefactor;
}

namespace {

// Distributes the multiset of q-values over the blocks of B: a matrix of
// counts (rows = distinct q values, columns = blocks) with the right margins
// stands for prod_l w_l! / prod e_{lj}! permutations, all producing the same
// monomial. The 1/prod pi_i! prefactor cancels against the within-block
// orderings, so no prefactor appears here.
void distribute(const std::vector<std::vector<int>>& blocks,
                const std::vector<long>& block_p_sums,
                const std::vector<std::pair<int, int>>& qvals, std::size_t row,
                std::vector<int>& capacity, const Rat& coeff, std::vector<long>& q_in_block,
                HeisenbergPoly& out) {
  if (row == qvals.size()) {
    std::vector<int> parts;
    parts.reserve(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      long sum = block_p_sums[j] - q_in_block[j];
      if (sum >= 0) throw_block_sum(sum);
      parts.push_back(static_cast<int>(-sum));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    out.add_term(Partition(std::move(parts)), coeff);
    return;
  }
  const auto [value, avail] = qvals[row];
  std::vector<int> put(blocks.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int left, const Rat& acc) -> void {
    if (j + 1 == blocks.size()) {
      if (left > capacity[j]) return;
      put[j] = left;
      Rat next(acc / Rat(factorial(static_cast<unsigned long>(left))));
      for (std::size_t t = 0; t < blocks.size(); ++t) {
        capacity[t] -= put[t];
        q_in_block[t] += static_cast<long>(put[t]) * value;
      }
      distribute(blocks, block_p_sums, qvals, row + 1, capacity, next, q_in_block, out);
      for (std::size_t t = 0; t < blocks.size(); ++t) {
        capacity[t] += put[t];
        q_in_block[t] -= static_cast<long>(put[t]) * value;
      }
      put[j] = 0;
      return;
    }
    for (int take = 0; take <= std::min(left, capacity[j]); ++take) {
      put[j] = take;
      self(self, j + 1, left - take, Rat(acc / Rat(factorial(static_cast<unsigned long>(take)))));
    }
    put[j] = 0;
  };
  Rat scaled(coeff * Rat(factorial(static_cast<unsigned long>(avail))));
  rec(rec, 0, avail, scaled);
}

}  // namespace

HeisenbergPoly h_sum_pq(const Partition& pi, std::span<const int> p, std::span<const int> q) {
  int r = static_cast<int>(p.size());
  if (pi.weight() != r || q.size() != p.size()) {
    throw std::invalid_argument("h_sum_pq arity mismatch");
  }
  std::vector<int> sorted_q(q.begin(), q.end());
  std::sort(sorted_q.begin(), sorted_q.end());
  std::vector<std::pair<int, int>> qvals;  // (value, multiplicity)
  for (int v : sorted_q) {
    if (!qvals.empty() && qvals.back().first == v) {
      ++qvals.back().second;
    } else {
      qvals.emplace_back(v, 1);
    }
  }

  HeisenbergPoly out;
  for (const SetPartition& B : set_partitions_of_type(r, pi)) {
    const auto& blocks = B.blocks();
    std::vector<long> block_p_sums(blocks.size(), 0);
    std::vector<int> capacity(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      for (int i : blocks[j]) block_p_sums[j] += p[i - 1];
      capacity[j] = static_cast<int>(blocks[j].size());
    }
    std::vector<long> q_in_block(blocks.size(), 0);
    distribute(blocks, block_p_sums, qvals, 0, capacity, Rat(1), q_in_block, out);
  }
  return out;
}

void check_straighten_hypotheses(std::span<const int> p, std::span<const int> q) {
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument("straighten_yx needs tuples of equal positive length");
  }
  for (int v : p) {
    if (v < 0) throw std::invalid_argument("straighten_yx exponents must be non-negative");
  }
  for (int v : q) {
    if (v < 0) throw std::invalid_argument("straighten_yx exponents must be non-negative");
  }
  std::size_t r = p.size();
  std::vector<int> pi_idx(r), qi_idx(r);
  std::iota(pi_idx.begin(), pi_idx.end(), 0);
  std::iota(qi_idx.begin(), qi_idx.end(), 0);
  std::sort(pi_idx.begin(), pi_idx.end(), [&](int a, int b) { return p[a] < p[b]; });
  std::sort(qi_idx.begin(), qi_idx.end(), [&](int a, int b) { return q[a] > q[b]; });

  if (p[pi_idx.back()] >= q[qi_idx.back()]) {
    throw std::invalid_argument("straightening hypothesis (1) violated: p_" +
                                std::to_string(pi_idx.back() + 1) + " = " +
                                std::to_string(p[pi_idx.back()]) + " >= q_" +
                                std::to_string(qi_idx.back() + 1) + " = " +
                                std::to_string(q[qi_idx.back()]));
  }
  // the binding case of hypothesis (2) pairs the smallest b+1 of p with the
  // largest b of q
  long psum = 0, qsum = 0;
  for (std::size_t b = 0; b < r; ++b) {
    psum += p[pi_idx[b]];
    if (psum < qsum) {
      std::span<const int> wa(pi_idx.data(), b + 1);
      std::span<const int> wb(qi_idx.data(), b);
      throw std::invalid_argument("straightening hypothesis (2) violated for A = " +
                                  index_set_str(wa) + " (p-indices), B = " + index_set_str(wb) +
                                  " (q-indices)");
    }
    qsum += q[qi_idx[b]];
  }
}

HeisenbergPoly straighten_yx(std::span<const int> p, std::span<const int> q) {
  check_straighten_hypotheses(p, q);
  int r = static_cast<int>(p.size());
  HeisenbergPoly out;
  for (const Partition& pi : partitions_of(r)) {
    out += h_sum_pq(pi, p, q) * coeff_C(pi);
  }
  if (r % 2 == 1) out *= Rat(-1);
  return out;
}

HeisenbergPoly h_sum_lambda(const Partition& pi, const Partition& lam) {
  if (pi.weight() != lam.support()) {
    throw std::invalid_argument("h_sum_lambda requires |pi| = supp(lambda)");
  }
  int r = lam.support();
  HeisenbergPoly out;
  for (const SetPartition& B : set_partitions_of_type(r, pi)) {
    std::vector<int> parts;
    for (const auto& block : B.blocks()) {
      long sum = 0;
      for (int j : block) sum += lam.part(j);
      parts.push_back(static_cast<int>(sum));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    out.add_term(Partition(std::move(parts)), 1);
  }
  return out;
}

HeisenbergPoly f_lambda(const Partition& lam) {
  int r = lam.support();
  if (r == 0) return HeisenbergPoly::one();
  HeisenbergPoly sum;
  for (const Partition& pi : partitions_of(r)) {
    sum += h_sum_lambda(pi, lam) * coeff_Cprime(pi);
  }
  Rat norm = (r % 2 == 0) ? Rat(1) : Rat(-1);
  for (int j = 1; j <= lam.first(); ++j) {
    norm /= Rat(factorial(static_cast<unsigned long>(lam.mult(j))));
  }
  return sum * norm;
}

}  // namespace cplstab

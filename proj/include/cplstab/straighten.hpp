#pragma once

#include <span>
#include <vector>

#include "cplstab/heisenberg.hpp"
#include "cplstab/set_partition.hpp"

namespace cplstab {

// Coefficients of the straightening expansion: prod pi_i! (pi_i - 1)! and
// prod (pi_i - 1)!.
Rat coeff_C(const Partition& pi);
Rat coeff_Cprime(const Partition& pi);

// The monomial prod_j h[ sum_{i in B_j} (p_i - q_{sigma(i)}) ] for a set
// partition B and a permutation sigma of {0,...,r-1} (0-indexed). Every block
// sum must be negative so the result stays inside the creation subalgebra;
// otherwise throws.
HeisenbergPoly block_monomial(const SetPartition& B, std::span<const int> sigma,
                              std::span<const int> p, std::span<const int> q);

// The symmetrized sum (1/prod pi_i!) sum_{B, sigma} block_monomial(...).
// The production path collapses the sigma-sum by distributing the q-value
// multiset over blocks (contingency tables); the naive double sum is kept as
// a slow reference.
HeisenbergPoly h_sum_pq(const Partition& pi, std::span<const int> p, std::span<const int> q);
HeisenbergPoly h_sum_pq_naive(const Partition& pi, std::span<const int> p, std::span<const int> q);

// Validates the two straightening hypotheses for the exponent tuples:
// (1) p_i < q_j for all i, j;
// (2) every |B|+1 of the p sum to at least what any |B| of the q sum to.
// Throws std::invalid_argument naming witnessing index sets on violation.
void check_straighten_hypotheses(std::span<const int> p, std::span<const int> q);

// Normal ordering of (prod y t^{p_i})(prod x t^{-q_j}) against a vector
// killed by the relevant y t^m: the value is
// (-1)^r sum_{pi |- r} C(pi) h_sum_pq(pi, p, q).
HeisenbergPoly straighten_yx(std::span<const int> p, std::span<const int> q);

// sum over set partitions B of type pi of prod_blocks h[-sum_{j in block} lambda_j].
// Requires |pi| = supp(lambda).
HeisenbergPoly h_sum_lambda(const Partition& pi, const Partition& lam);

// Stable polynomial form of the diagonal basis vectors:
// (-1)^r / prod m_j(lambda)! * sum_{pi |- r} C'(pi) h_sum_lambda(pi, lambda),
// with r = supp(lambda); the empty partition gives 1.
HeisenbergPoly f_lambda(const Partition& lam);

}  // namespace cplstab

#include <doctest.h>

#include <array>

#include "cplstab/fock.hpp"
#include "cplstab/straighten.hpp"

using namespace cplstab;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// brute-force recursion for the C coefficient, following the two cases of
// the inductive argument: a final part of 1 drops off, a final part >= 2
// contributes pi_s (pi_s - 1)
Rat coeff_C_recursive(const Partition& pi) {
  if (pi.empty()) return 1;
  std::vector<int> parts = pi.parts();
  int last = parts.back();
  parts.pop_back();
  if (last == 1) return coeff_C_recursive(Partition(parts));
  std::vector<int> dec = parts;
  dec.push_back(last - 1);
  return Rat(static_cast<long>(last) * (last - 1)) * coeff_C_recursive(Partition(dec));
}

}  // namespace

TEST_CASE("expansion coefficients") {
  CHECK(coeff_C(P({3})) == 12);
  CHECK(coeff_Cprime(P({3})) == 2);
  CHECK(coeff_C(P({1, 1, 1, 1})) == 1);
  CHECK(coeff_Cprime(P({1, 1, 1, 1})) == 1);
  CHECK(coeff_C(P({2, 2})) == 4);
  CHECK(coeff_Cprime(P({2, 2})) == 1);
  for (int r = 0; r <= 8; ++r) {
    for (const Partition& pi : partitions_of(r)) {
      CHECK(coeff_C(pi) == coeff_C_recursive(pi));
    }
  }
}

TEST_CASE("block monomials") {
  std::array<int, 2> id{0, 1}, swap{1, 0};
  std::array<int, 2> p1{1, 2}, q1{3, 3};
  CHECK(block_monomial(SetPartition({{1, 2}}), id, p1, q1) ==
        HeisenbergPoly::monomial(P({3})));

  std::array<int, 2> p2{0, 0}, q2{1, 1};
  CHECK(block_monomial(SetPartition({{1}, {2}}), id, p2, q2) ==
        HeisenbergPoly::monomial(P({1, 1})));

  std::array<int, 2> p3{0, 1}, q3{2, 3};
  CHECK(block_monomial(SetPartition({{1}, {2}}), swap, p3, q3) ==
        HeisenbergPoly::monomial(P({3, 1})));

  std::array<int, 2> bad_p{5, 0}, bad_q{1, 6};
  CHECK_THROWS_AS(block_monomial(SetPartition({{1}, {2}}), id, bad_p, bad_q),
                  std::invalid_argument);
}

TEST_CASE("symmetrized sums") {
  std::array<int, 1> p1{2}, q1{5};
  CHECK(h_sum_pq(P({1}), p1, q1) == HeisenbergPoly::monomial(P({3})));

  std::array<int, 2> p2{1, 2}, q2{3, 3};
  CHECK(h_sum_pq(P({2}), p2, q2) == HeisenbergPoly::monomial(P({3})));

  // constant-q collapse onto the lambda form
  for (int k : {3, 4, 5}) {
    for (const Partition& lam : {P({2, 1}), P({1, 1}), P({3, 2, 1})}) {
      int r = lam.support();
      if (lam.first() > k) continue;
      std::vector<int> p, q(static_cast<std::size_t>(r), k);
      for (int i = 1; i <= r; ++i) p.push_back(k - lam.part(i));
      for (const Partition& pi : partitions_of(r)) {
        Rat ratio = Rat(factorial(static_cast<unsigned long>(r)));
        for (int part : pi.parts()) ratio /= Rat(factorial(static_cast<unsigned long>(part)));
        CHECK(h_sum_pq(pi, p, q) == h_sum_lambda(pi, lam) * ratio);
      }
    }
  }

  // collapsed evaluation equals the naive double sum for r <= 4
  std::mt19937_64 rng(7);
  for (int caseno = 0; caseno < 40; ++caseno) {
    int r = 1 + static_cast<int>(rng() % 4);
    std::vector<int> p, q;
    for (int i = 0; i < r; ++i) {
      p.push_back(static_cast<int>(rng() % 3));
      q.push_back(4 + static_cast<int>(rng() % 3));
    }
    for (const Partition& pi : partitions_of(r)) {
      CHECK(h_sum_pq(pi, p, q) == h_sum_pq_naive(pi, p, q));
    }
  }
}

TEST_CASE("hypothesis checking") {
  std::array<int, 2> p{1, 2}, q{3, 3};
  CHECK_NOTHROW(check_straighten_hypotheses(p, q));

  std::array<int, 2> p_tall{3, 2};
  CHECK_THROWS_WITH_AS(check_straighten_hypotheses(p_tall, q),
                       doctest::Contains("hypothesis (1)"), std::invalid_argument);

  std::array<int, 2> p_low{0, 1}, q_high{5, 6};
  CHECK_THROWS_WITH_AS(check_straighten_hypotheses(p_low, q_high),
                       doctest::Contains("hypothesis (2)"), std::invalid_argument);
}

TEST_CASE("straightening the base case and small products") {
  std::array<int, 1> p{1}, q{4};
  CHECK(straighten_yx(p, q) == HeisenbergPoly::monomial(P({3}), -1));

  // r = 2 against the model
  const FockVector vac = highest_weight_vector_even();
  std::array<int, 2> p2{1, 2}, q2{3, 3};
  FockVector direct =
      act(gen_y(1), act(gen_y(2), act(gen_x(-3), act(gen_x(-3), vac))));
  CHECK(straighten_yx(p2, q2).apply_to(vac) == direct);

  std::array<int, 3> p3{0, 1, 2}, q3{3, 3, 3};
  FockVector direct3 = act(
      gen_y(0),
      act(gen_y(1), act(gen_y(2), act(gen_x(-3), act(gen_x(-3), act(gen_x(-3), vac))))));
  CHECK(straighten_yx(p3, q3).apply_to(vac) == direct3);

  // permuting p and q separately leaves the value fixed
  std::array<int, 3> p3b{2, 0, 1}, q3b{3, 3, 3};
  CHECK(straighten_yx(p3, q3) == straighten_yx(p3b, q3b));
}

TEST_CASE("lambda-indexed sums and the stable polynomial") {
  Partition lam3 = P({3, 2, 1});
  CHECK(h_sum_lambda(P({3}), lam3) == HeisenbergPoly::monomial(P({6})));
  HeisenbergPoly two_one = h_sum_lambda(P({2, 1}), lam3);
  HeisenbergPoly want21 = HeisenbergPoly::monomial(P({5, 1})) +
                          HeisenbergPoly::monomial(P({4, 2})) +
                          HeisenbergPoly::monomial(P({3, 3}));
  CHECK(two_one == want21);
  CHECK(h_sum_lambda(P({1, 1, 1}), lam3) == HeisenbergPoly::monomial(P({3, 2, 1})));
  CHECK_THROWS_AS(h_sum_lambda(P({2}), lam3), std::invalid_argument);

  CHECK(f_lambda(Partition{}) == HeisenbergPoly::one());
  CHECK(f_lambda(P({2, 1})) ==
        HeisenbergPoly::monomial(P({3})) + HeisenbergPoly::monomial(P({2, 1})));
  CHECK(f_lambda(P({1, 1})) == HeisenbergPoly::monomial(P({2}), make_rat(1, 2)) +
                                   HeisenbergPoly::monomial(P({1, 1}), make_rat(1, 2)));

  // homogeneity: every monomial of f_lambda has total degree |lambda|
  for (int d = 0; d <= 6; ++d) {
    for (const Partition& lam : partitions_of(d)) {
      CHECK(f_lambda(lam).homogeneous_degree() == d);
    }
  }
}

#include <doctest.h>

#include "cplstab/fock.hpp"

using namespace cplstab;

namespace {
const FockVector kVac0 = highest_weight_vector_even();
const FockVector kVac1 = highest_weight_vector_odd();
}  // namespace

TEST_CASE("basic creation and annihilation actions") {
  CHECK(act(gen_y(0), kVac0).is_zero());
  CHECK(act(gen_h(-1), kVac0) == FockVector::state(0, Partition({1})));

  // x t^{-1} hits the one-dimensional weight space spanned by |2; empty>
  FockVector xv = act(gen_x(-1), kVac0);
  REQUIRE(xv.size() == 1);
  const auto& [state, coeff] = *xv.terms().begin();
  CHECK(state == FockState{2, Partition{}});
  CHECK((coeff == 1 || coeff == -1));

  // c is the identity, d reads off the delta coefficient
  FockVector v = FockVector::state(1, Partition({2, 1}), make_rat(3, 7));
  CHECK(act(gen_c(), v) == v);
  CHECK(act(gen_d(), v) == v * make_rat(-13, 4));  // -(1/4 + 3)

  // h t^0 reads the charge; h t^k annihilates with [h t^k, h t^-k] = 2k
  CHECK(act(gen_h(0), v) == v);
  CHECK(act(gen_h(1), FockVector::state(0, Partition({1}))) == kVac0 * 2);
  CHECK(act(gen_h(2), FockVector::state(0, Partition({2}))) == kVac0 * 4);
  CHECK(act(gen_h(2), kVac0).is_zero());
}

TEST_CASE("highest weight relations at both vacua") {
  // e1 = x, e0 = y t, f1 = y, f0 = x t^-1
  CHECK(act(gen_x(0), kVac0).is_zero());
  CHECK(act(gen_y(1), kVac0).is_zero());
  CHECK(act(gen_y(0), kVac0).is_zero());                        // f1^{0+1}
  CHECK(apply_word({{gen_x(-1), 2}}, kVac0).is_zero());         // f0^{0+2}
  CHECK(!act(gen_x(-1), kVac0).is_zero());

  CHECK(act(gen_x(0), kVac1).is_zero());
  CHECK(act(gen_y(1), kVac1).is_zero());
  CHECK(apply_word({{gen_y(0), 2}}, kVac1).is_zero());          // f1^{1+1}
  CHECK(!act(gen_y(0), kVac1).is_zero());
  CHECK(act(gen_x(-1), kVac1).is_zero());                       // f0^{0+1}
}

TEST_CASE("weight homogeneity of generator actions") {
  FockVector v = FockVector::state(2, Partition({3, 1}));
  AffineWeight w = v.homogeneous_weight().value();
  for (int m : {-2, -1, 0, 1, 2}) {
    FockVector xv = act(gen_x(m), v);
    if (!xv.is_zero()) {
      CHECK(xv.homogeneous_weight().value() == w + wt_alpha1() + wt_delta().scaled(m));
    }
    FockVector yv = act(gen_y(m), v);
    if (!yv.is_zero()) {
      CHECK(yv.homogeneous_weight().value() == w - wt_alpha1() + wt_delta().scaled(m));
    }
    FockVector hv = act(gen_h(m), v);
    if (!hv.is_zero()) {
      CHECK(hv.homogeneous_weight().value() == w + wt_delta().scaled(m));
    }
  }
}

TEST_CASE("commutator composite from the defining bracket") {
  // [x t^1, y t^-1] = h t^0 + c on |0;(2)>
  FockVector v = FockVector::state(0, Partition({2}));
  FockVector lhs = act(gen_x(1), act(gen_y(-1), v)) - act(gen_y(-1), act(gen_x(1), v));
  FockVector rhs = act(gen_h(0), v) + v;
  CHECK(lhs == rhs);
}

TEST_CASE("divided power word application") {
  // (y t^2)^{(1)} (x t^{-2})^{(2)} v = (x t^{-2})^{(1)} v
  FockVector lhs = apply_word({{gen_y(2), 1}, {gen_x(-2), 2}}, kVac0);
  FockVector rhs = apply_word({{gen_x(-2), 1}}, kVac0);
  CHECK(lhs == rhs);
  CHECK(apply_word(std::span<const WordFactor>{}, lhs) == lhs);
}

TEST_CASE("weight space dimensions match partition counts") {
  // states of weight Lambda0 + j alpha1 - (j^2 + d) delta are exactly
  // charge 2j, degree d
  for (int j = -3; j <= 3; ++j) {
    for (int d = 0; d <= 7; ++d) {
      AffineWeight target = translate(wt_lambda0(), Rat(j)) - wt_delta().scaled(d);
      long count = 0;
      for (int m = -8; m <= 8; ++m) {
        for (int deg = 0; deg <= 16; ++deg) {
          for (const Partition& mu : partitions_of(deg)) {
            if (FockState{m, mu}.weight() == target) ++count;
          }
        }
      }
      CHECK(count == partition_count(d));
    }
  }
}

TEST_CASE("local nilpotency of real root generators") {
  for (int m : {-2, -1, 0, 1, 2}) {
    for (const auto& g : {gen_x(m), gen_y(m)}) {
      for (int charge : {-2, -1, 0, 1, 2}) {
        FockVector v = FockVector::state(charge, Partition({2, 1}));
        int guard = 2 * (3 + 2) + 4;
        int steps = 0;
        while (!v.is_zero() && steps <= guard) {
          v = act(g, v);
          ++steps;
        }
        CHECK(v.is_zero());
      }
    }
  }
}

TEST_CASE("defining relations hold on a small grid") {
  RelationReport r = check_relations(3, 2, 2);
  CHECK(r.cases > 0);
  CHECK(r.violations.empty());
}

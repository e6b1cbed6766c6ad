#include <doctest.h>

#include "cplstab/weights.hpp"

using namespace cplstab;

TEST_CASE("bilinear form values") {
  CHECK(form(wt_alpha1(), wt_alpha1()) == 2);
  CHECK(form(wt_delta(), wt_delta()) == 0);
  CHECK(form(wt_lambda0(), wt_lambda0()) == 0);
  CHECK(form(wt_delta(), wt_lambda0()) == 1);
  CHECK(form(wt_alpha1(), wt_delta()) == 0);
  CHECK(form(wt_alpha1(), wt_lambda0()) == 0);
  CHECK(form(wt_omega1(), wt_omega1()) == make_rat(1, 2));
  CHECK(wt_alpha0() + wt_alpha1() == wt_delta());
  CHECK(wt_lambda1() == wt_lambda0() + wt_omega1() + AffineWeight{0, 0, make_rat(-1, 4)});
}

TEST_CASE("coroot pairings") {
  AffineWeight mu{2, 3, make_rat(5, 4)};
  CHECK(mu.pair_h() == 3);
  CHECK(mu.pair_c() == 2);
  CHECK(mu.pair_d() == make_rat(5, 4));
  CHECK(mu.pair_alpha0_check() == -1);
  CHECK(wt_lambda0().pair_h() == 0);
  CHECK(wt_lambda1().pair_h() == 1);
  CHECK(wt_lambda0().pair_alpha0_check() == 1);
  CHECK(wt_lambda1().pair_alpha0_check() == 0);
}

TEST_CASE("translations") {
  CHECK(translate(wt_delta(), make_rat(7, 2)) == wt_delta());
  CHECK(translate(wt_lambda0(), Rat(1)) == wt_lambda0() + wt_alpha1() - wt_delta());
  for (int j = -4; j <= 4; ++j) {
    AffineWeight want{1, j, make_rat(-j * j, 4)};
    CHECK(translate(wt_lambda0(), make_rat(j, 2)) == want);
  }
  CHECK_THROWS_AS(translate(wt_lambda0(), make_rat(1, 3)), std::invalid_argument);

  // additivity
  for (int tp = -6; tp <= 6; ++tp) {
    for (int tq = -6; tq <= 6; ++tq) {
      AffineWeight mu{1, -2, make_rat(3, 4)};
      CHECK(translate(translate(mu, make_rat(tp, 2)), make_rat(tq, 2)) ==
            translate(mu, make_rat(tp + tq, 2)));
    }
  }
}

TEST_CASE("reflections and the diagram automorphism") {
  CHECK(reflect(wt_alpha1(), 1) == wt_alpha1().scaled(-1));
  CHECK(reflect(wt_alpha0(), 0) == wt_alpha0().scaled(-1));
  CHECK(reflect(wt_lambda0(), 1) == wt_lambda0());
  CHECK(sigma(wt_lambda0()) == wt_lambda1());
  CHECK(sigma(wt_alpha0()) == wt_alpha1());
  CHECK(sigma(wt_alpha1()) == wt_alpha0());
  CHECK(sigma(wt_rho()) == wt_rho());
  for (const AffineWeight& mu :
       {wt_lambda0(), wt_lambda1(), wt_alpha0(), wt_alpha1(), wt_delta()}) {
    CHECK(sigma(sigma(mu)) == mu);
  }
  CHECK_THROWS_AS(reflect(wt_lambda0(), 2), std::invalid_argument);
}

TEST_CASE("form invariance under the Weyl group elements used here") {
  const AffineWeight basis[] = {wt_lambda0(), wt_omega1(), wt_delta(), wt_alpha1()};
  auto t_plus = [](const AffineWeight& m) { return translate(m, Rat(1)); };
  auto t_minus = [](const AffineWeight& m) { return translate(m, Rat(-1)); };
  auto s0 = [](const AffineWeight& m) { return reflect(m, 0); };
  auto s1 = [](const AffineWeight& m) { return reflect(m, 1); };
  for (auto w : {+t_plus, +t_minus, +s0, +s1}) {
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        CHECK(form(w(a), w(b)) == form(a, b));
      }
    }
  }
}

TEST_CASE("generator weight and the basis vector weight") {
  CHECK(weight_of_wn(0) == wt_lambda0());
  CHECK(weight_of_wn(1) == wt_lambda1());
  CHECK(weight_of_wn(2) == wt_lambda0() + wt_omega1().scaled(2) - wt_delta());
  for (int n = 0; n <= 8; ++n) {
    CHECK(weight_of_wn(n).pair_h() == n);
  }

  AffineWeight example = wt_lambda0() - wt_delta().scaled(3);
  CHECK(weight_of_cl(IndexTriple::parse("4:2:2,1")) == example);
  CHECK(weight_of_cl(IndexTriple::parse("6:3:2,1")) == example);
  for (int n = 0; n <= 8; ++n) {
    CHECK(weight_of_cl(IndexTriple{n, n, Partition{}}) == weight_of_wn(n));
    for (const IndexTriple& xi : enum_triples(n)) {
      CHECK(weight_of_cl(xi) == weight_of_cl(embed_next(xi)));
      if (n % 2 == 0) {
        // every even weight has the shape Lambda0 + j alpha1 - (j^2 + d) delta
        AffineWeight w = weight_of_cl(xi);
        long j2 = (w.w1 / 2) * (w.w1 / 2);
        CHECK(w.w1 % 2 == 0);
        CHECK(w.L0 == 1);
        Rat depth = -w.d;
        CHECK(depth == Rat(j2) + Rat(xi.lam.weight()));
      }
    }
  }
}

TEST_CASE("weight text form") {
  CHECK(weight_str(AffineWeight{1, -2, make_rat(-3, 4)}) ==
        "1Λ0 + -2ω1 + (-3/4)δ");
}

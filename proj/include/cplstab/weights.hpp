#pragma once

#include <string>

#include "cplstab/index_triple.hpp"
#include "cplstab/rational.hpp"

namespace cplstab {

/// Exact weight in span{Lambda0, omega1, delta}, the subspace of the dual
/// Cartan that everything here lives in. The Lambda0 and omega1 coordinates
/// stay integral; the delta coordinate needs quarters (Lambda1 has -1/4).
struct AffineWeight {
  long L0 = 0;   // coefficient of Lambda0
  long w1 = 0;   // coefficient of omega1
  Rat d = 0;     // coefficient of delta

  bool operator==(const AffineWeight& other) const = default;

  AffineWeight operator+(const AffineWeight& o) const {
    return {L0 + o.L0, w1 + o.w1, Rat(d + o.d)};
  }
  AffineWeight operator-(const AffineWeight& o) const {
    return {L0 - o.L0, w1 - o.w1, Rat(d - o.d)};
  }
  AffineWeight scaled(long c) const { return {c * L0, c * w1, Rat(Rat(c) * d)}; }

  // Coroot/degree pairings.
  long pair_h() const { return w1; }          // <mu, alpha1_check>
  long pair_c() const { return L0; }
  Rat pair_d() const { return d; }
  long pair_alpha0_check() const { return L0 - w1; }
};

inline AffineWeight wt_lambda0() { return {1, 0, 0}; }
inline AffineWeight wt_omega1() { return {0, 1, 0}; }
inline AffineWeight wt_delta() { return {0, 0, 1}; }
inline AffineWeight wt_alpha1() { return {0, 2, 0}; }
inline AffineWeight wt_alpha0() { return {0, -2, 1}; }
inline AffineWeight wt_lambda1() { return {1, 1, make_rat(-1, 4)}; }
// Weyl vector, fixed by the diagram automorphism; used in consistency checks.
inline AffineWeight wt_rho() { return {2, 1, 0}; }

// Invariant symmetric bilinear form: (alpha1|alpha1)=2, (delta|Lambda0)=1,
// (delta|delta)=(Lambda0|Lambda0)=0, alpha1 orthogonal to both.
Rat form(const AffineWeight& a, const AffineWeight& b);

// Lattice translation t_alpha with alpha = q * alpha1; requires 2q integral.
AffineWeight translate(const AffineWeight& mu, const Rat& q);

// Simple reflection s_i, i in {0, 1}.
AffineWeight reflect(const AffineWeight& mu, int i);

// Diagram automorphism sigma = s_1 t_{-omega1} (swaps alpha0 and alpha1).
AffineWeight sigma(const AffineWeight& mu);

// Weight of the Weyl module generator: Lambda0 + n*omega1 - (n^2/4) delta.
// Computed through translate for both parities and checked against the
// closed form.
AffineWeight weight_of_wn(int n);

// Weight of the normalized basis vector indexed by xi.
AffineWeight weight_of_cl(const IndexTriple& xi);

std::string weight_str(const AffineWeight& mu);   // "aΛ0 + bω1 + (p/q)δ"

}  // namespace cplstab

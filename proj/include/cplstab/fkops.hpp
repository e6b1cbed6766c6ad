#pragma once

#include <utility>
#include <vector>

#include "cplstab/fock.hpp"
#include "cplstab/index_triple.hpp"

namespace cplstab {

/// Composition of exponentials exp(+-g) of real-root generator actions,
/// applied lazily. Application always terminates: each series truncates by
/// local nilpotency, with a hard iteration cap turning a model bug into an
/// error instead of a hang.
class ModuleOperator {
 public:
  static ModuleOperator identity() { return {}; }
  static ModuleOperator exponential(AlgebraGen g, int sign);

  // this applied first, then next
  ModuleOperator then(const ModuleOperator& next) const;
  ModuleOperator inverse() const;

  FockVector apply(const FockVector& v) const;

 private:
  struct Step {
    AlgebraGen gen;
    int sign = 1;
  };
  std::vector<Step> steps_;  // in application order
};

// Reflection operator r_alpha for the real root alpha = gamma + k delta,
// gamma_sign = +1 for alpha1, -1 for -alpha1:
// exp(-E_alpha) exp(E_{-alpha}) exp(-E_alpha), mapping V_mu to V_{s_alpha(mu)}.
ModuleOperator reflection_operator(int gamma_sign, int k);

// Translation operator for p alpha1: the |p|-fold power of the one-step
// operator r_{delta-alpha1} r_{alpha1} (inverse composition for p < 0).
ModuleOperator translation(int p);

// Adjoint translation on generators: x t^k -> x t^{k-2p}, y t^k -> y t^{k+2p}.
// Only x and y components are defined.
AlgebraGen translate_generator(int p, const AlgebraGen& g);

// Reduction of a stable even index to the diagonal k = n/2: returns
// (2(n-k), n-k, lambda) and the translation amount k - n/2.
std::pair<IndexTriple, int> reduce_to_diagonal(const IndexTriple& xi);

// Diagram-rotation automorphism on generators:
// y t^m -> x t^{m-1}, x t^m -> y t^{m+1}, h t^m -> -h t^m + [m=0] c.
GenCombo diagram_twist(const AlgebraGen& g);

// Transpose involution: x t^m <-> y t^m, h t^m -> -h t^m, c and d fixed.
GenCombo transpose_twist(const AlgebraGen& g);

// Applies a generator map to each term of a combination.
GenCombo apply_twist(GenCombo (*twist)(const AlgebraGen&), const GenCombo& combo);

// Module intertwiners, realized in closed form on Fock states and validated
// by their intertwining properties in the test suites.
//
// G: even sector onto itself, G(v_{Lambda0}) = v_{Lambda0},
//    G(X v) = transpose_twist(X) G(v). Sends |m;mu> to (-1)^{len mu} |-m;mu>.
FockVector intertwiner_G(const FockVector& v);
// F: odd sector to even sector, F(v_{Lambda1}) = v_{Lambda0},
//    F(X v) = tau^{-1}(X) F(v) with tau the composite twist. Charge shift -1.
FockVector intertwiner_F(const FockVector& v);
// Odd-sector analogue of G, normalized at the reflected extremal vector:
//    G'(v_{Lambda1}) = |-1; empty>, G'(X v) = transpose_twist(X) G'(v).
FockVector intertwiner_G_odd(const FockVector& v);

}  // namespace cplstab

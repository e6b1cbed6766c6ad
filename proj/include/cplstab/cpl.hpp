#pragma once

#include <vector>

#include "cplstab/fock.hpp"
#include "cplstab/index_triple.hpp"

namespace cplstab {

/// Normalization data of a basis index: the multiplicity vector
/// (m_0, ..., m_k) of the exponents k - lambda_i, the scalar
/// z = eps / prod m_j!, and the sign eps = (-1)^([n/4] - [(n-k)/2]).
struct Normalization {
  std::vector<int> m;   // m[j] = multiplicity of exponent k - j, indices 0..k
  Rat z;
  int eps = 1;
};

Normalization normalization(const IndexTriple& xi);

// Generator of the n-th Weyl module inside the Fock model:
// (x t^{-n/2})^{(n/2)} applied to the even vacuum for even n,
// (x t^{-(n+1)/2})^{((n-1)/2)} applied to the odd vacuum for odd n. Cached.
const FockVector& weyl_generator(int n);

// B(xi) = (prod_{i=1}^{n-k} y t^{lambda_i}) w_n, zero-padded exponents.
FockVector basis_b(const IndexTriple& xi);

// CL(xi) = z(xi) (prod_{i=1}^{n-k} y t^{k-lambda_i}) w_n. Computed both as
// the z-scaled plain product and as the eps-signed divided-power product;
// the two routes are asserted equal.
FockVector basis_cl(const IndexTriple& xi);

// Lowest weight generator of the same module: the transpose-intertwiner
// image of weyl_generator(n). Cached.
const FockVector& lowest_weight_generator(int n);

// Raising-operator basis from the lowest weight vector:
// (prod_{i=1}^{n-k} x t^{lambda_i}) v_n for even n; for odd n the image of
// basis_b under the odd-sector transpose intertwiner.
FockVector basis_bbar(const IndexTriple& xi);

}  // namespace cplstab

#pragma once

#include <vector>

#include "cplstab/fock.hpp"

namespace cplstab {

// Rank over the rationals of the span of the given vectors, by exact
// Gaussian elimination on the canonical state coordinates. No tolerances.
long exact_rank(const std::vector<FockVector>& vectors);

// True when v lies in the rational span of the given vectors.
bool in_span(const FockVector& v, const std::vector<FockVector>& vectors);

}  // namespace cplstab

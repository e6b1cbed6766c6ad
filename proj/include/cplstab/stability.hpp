#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cplstab/cpl.hpp"
#include "cplstab/index_triple.hpp"
#include "cplstab/weights.hpp"

namespace cplstab {

struct StabilityReport {
  int n = 0;
  long cases = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// For every stable index with first component n, checks that the normalized
// basis vector is unchanged under the index embedding (and that the embedded
// index is again stable). An empty violation list is the theorem instance.
StabilityReport check_stability(int n);

/// One weight space of the direct-limit basis: weight mu determined by
/// (j, d), realized inside the module with chosen_n = 2(d + |j|).
struct StableBasisEntry {
  AffineWeight mu;
  int j = 0;
  int d = 0;
  int chosen_n = 0;
  std::vector<std::pair<IndexTriple, FockVector>> vectors;
};

// Basis of the weight space t_{j alpha1}(Lambda0) - d delta, computed at
// n = 2(d + |j|). The suites verify the p(d) count, exact linear
// independence and independence of the choice of n.
StableBasisEntry stable_basis_at(int j, int d);

// All entries with j^2 + d <= dmax (every weight of delta-depth at most
// dmax), each computed as above.
std::vector<StableBasisEntry> basis_up_to(int dmax);

}  // namespace cplstab

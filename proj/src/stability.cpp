#include "cplstab/stability.hpp"

#include <stdexcept>

namespace cplstab {

StabilityReport check_stability(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  StabilityReport report;
  report.n = n;
  for (const IndexTriple& xi : enum_triples(n)) {
    if (!is_stable(xi)) continue;
    ++report.cases;
    IndexTriple next = embed_next(xi);
    if (!is_stable(next)) {
      report.violations.push_back("embedding of stable " + xi.str() + " is not stable");
      continue;
    }
    if (!(basis_cl(xi) == basis_cl(next))) {
      report.violations.push_back("vector changed under embedding at " + xi.str());
    }
  }
  return report;
}

StableBasisEntry stable_basis_at(int j, int d) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  StableBasisEntry entry;
  entry.j = j;
  entry.d = d;
  entry.chosen_n = 2 * (d + std::abs(j));
  entry.mu = translate(wt_lambda0(), Rat(j)) - wt_delta().scaled(d);
  for (const IndexTriple& xi : enum_triples_mu(j, d, entry.chosen_n)) {
    entry.vectors.emplace_back(xi, basis_cl(xi));
  }
  return entry;
}

std::vector<StableBasisEntry> basis_up_to(int dmax) {
  if (dmax < 0) throw std::invalid_argument("dmax must be non-negative");
  std::vector<StableBasisEntry> out;
  int jmax = 0;
  while ((jmax + 1) * (jmax + 1) <= dmax) ++jmax;
  for (int j = -jmax; j <= jmax; ++j) {
    for (int d = 0; j * j + d <= dmax; ++d) {
      out.push_back(stable_basis_at(j, d));
    }
  }
  return out;
}

}  // namespace cplstab

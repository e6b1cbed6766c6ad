#pragma once

#include <map>
#include <optional>

#include "cplstab/fock.hpp"
#include "cplstab/partition.hpp"
#include "cplstab/rational.hpp"

namespace cplstab {

/// Polynomial with exact rational coefficients in the commuting creation
/// generators h[-1], h[-2], ...; a monomial prod h[-mu_i] is stored as the
/// partition mu. Value type of the straightening engine.
class HeisenbergPoly {
 public:
  HeisenbergPoly() = default;

  static HeisenbergPoly one() { return monomial(Partition{}); }
  static HeisenbergPoly monomial(Partition mu, Rat coeff = 1);

  const std::map<Partition, Rat, PartitionCanonicalLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Partition mu, const Rat& c);

  HeisenbergPoly& operator+=(const HeisenbergPoly& o);
  HeisenbergPoly& operator-=(const HeisenbergPoly& o);
  HeisenbergPoly& operator*=(const Rat& c);
  HeisenbergPoly operator+(const HeisenbergPoly& o) const;
  HeisenbergPoly operator-(const HeisenbergPoly& o) const;
  HeisenbergPoly operator*(const HeisenbergPoly& o) const;
  HeisenbergPoly operator*(const Rat& c) const;
  bool operator==(const HeisenbergPoly& other) const = default;

  // Total degree when all monomials share one, else nullopt (zero gives 0).
  std::optional<long> homogeneous_degree() const;

  // Acts on a Fock vector: every h[-k] is the creation operator h t^{-k}.
  FockVector apply_to(const FockVector& v) const;

 private:
  std::map<Partition, Rat, PartitionCanonicalLess> terms_;
};

}  // namespace cplstab

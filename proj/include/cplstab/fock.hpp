#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cplstab/partition.hpp"
#include "cplstab/rational.hpp"
#include "cplstab/weights.hpp"

namespace cplstab {

/// Basis state |m; mu> of the charged Fock space: lattice charge m (the
/// lattice element e^{m omega1}) times the creation monomial
/// h[-mu1] h[-mu2] ... applied to the charge-m vacuum. Even charges span
/// the Lambda0 sector, odd charges the Lambda1 sector.
struct FockState {
  int charge = 0;
  Partition mu;

  AffineWeight weight() const;   // Lambda0 + m*omega1 - (m^2/4 + |mu|) delta

  bool operator==(const FockState& other) const = default;
  bool operator<(const FockState& other) const;   // (charge, degree, canonical mu)
};

/// Finite linear combination of Fock states with nonzero exact rational
/// coefficients. Immutable value semantics; term order is canonical.
class FockVector {
 public:
  FockVector() = default;

  static FockVector state(int charge, Partition mu, Rat coeff = 1);
  static FockVector vacuum(int charge) { return state(charge, Partition{}); }

  const std::map<FockState, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(FockState s, const Rat& c);   // drops the term if it cancels

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rat& c);
  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector operator*(const Rat& c) const;
  FockVector operator-() const;
  bool operator==(const FockVector& other) const = default;

  // The common weight of all terms, or nullopt if zero or inhomogeneous.
  std::optional<AffineWeight> homogeneous_weight() const;

  int max_fock_degree() const;   // max |mu| over terms, 0 if zero
  int max_abs_charge() const;

 private:
  std::map<FockState, Rat> terms_;
};

inline FockVector highest_weight_vector_even() { return FockVector::vacuum(0); }  // v_{Lambda0}
inline FockVector highest_weight_vector_odd() { return FockVector::vacuum(1); }   // v_{Lambda1}

enum class GenKind { X, Y, H, C, D };

/// Generator x t^m, y t^m, h t^m, c or d of the affine algebra
/// (degree is ignored for c and d).
struct AlgebraGen {
  GenKind kind = GenKind::C;
  int degree = 0;

  bool operator==(const AlgebraGen& other) const = default;
  std::string str() const;
};

inline AlgebraGen gen_x(int m) { return {GenKind::X, m}; }
inline AlgebraGen gen_y(int m) { return {GenKind::Y, m}; }
inline AlgebraGen gen_h(int m) { return {GenKind::H, m}; }
inline AlgebraGen gen_c() { return {GenKind::C, 0}; }
inline AlgebraGen gen_d() { return {GenKind::D, 0}; }

// Action of a generator on the charged Fock space. Total and linear; c acts
// as the identity (level 1) and x t^m / y t^m shift the charge by +2 / -2.
FockVector act(const AlgebraGen& g, const FockVector& v);

// Linear combination of generators, e.g. a bracket value or an
// automorphism image of a single generator.
using GenCombo = std::vector<std::pair<AlgebraGen, Rat>>;

FockVector act(const GenCombo& combo, const FockVector& v);

// [a, b] as a generator combination, from the loop-algebra bracket with
// level term m delta_{m,-n} (A|B) c and [d, A t^m] = m A t^m.
GenCombo bracket(const AlgebraGen& a, const AlgebraGen& b);

// One word factor: generator with a divided power X^(p) = X^p / p!.
struct WordFactor {
  AlgebraGen gen;
  unsigned power = 1;
};

// Applies the factors right to left, each as an exact divided power.
FockVector apply_word(std::span<const WordFactor> word, const FockVector& v);
FockVector apply_word(std::initializer_list<WordFactor> word, const FockVector& v);

struct RelationReport {
  long cases = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Verifies commutator-of-actions == action-of-bracket for all generator
// pairs with |m|, |n| <= m_range on all states with |charge| <= charge_bound
// and |mu| <= degree_bound. The model's self-consistency oracle.
RelationReport check_relations(int degree_bound, int charge_bound, int m_range);

// Safety rail: maximum Fock degree a single action may produce, from
// CPLSTAB_MAX_DEGREE (default 512). Exceeding it throws.
int fock_degree_cap();

}  // namespace cplstab

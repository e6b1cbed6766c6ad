#include "cplstab/heisenberg.hpp"

namespace cplstab {

HeisenbergPoly HeisenbergPoly::monomial(Partition mu, Rat coeff) {
  HeisenbergPoly p;
  p.add_term(std::move(mu), coeff);
  return p;
}

void HeisenbergPoly::add_term(Partition mu, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(mu), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HeisenbergPoly& HeisenbergPoly::operator+=(const HeisenbergPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

HeisenbergPoly& HeisenbergPoly::operator-=(const HeisenbergPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

HeisenbergPoly& HeisenbergPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, v] : terms_) v *= c;
  return *this;
}

HeisenbergPoly HeisenbergPoly::operator+(const HeisenbergPoly& o) const {
  HeisenbergPoly r = *this;
  r += o;
  return r;
}

HeisenbergPoly HeisenbergPoly::operator-(const HeisenbergPoly& o) const {
  HeisenbergPoly r = *this;
  r -= o;
  return r;
}

HeisenbergPoly HeisenbergPoly::operator*(const HeisenbergPoly& o) const {
  HeisenbergPoly r;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      r.add_term(a.union_with(b), Rat(ca * cb));
    }
  }
  return r;
}

HeisenbergPoly HeisenbergPoly::operator*(const Rat& c) const {
  HeisenbergPoly r = *this;
  r *= c;
  return r;
}

std::optional<long> HeisenbergPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  long d = terms_.begin()->first.weight();
  for (const auto& [mu, c] : terms_) {
    if (mu.weight() != d) return std::nullopt;
  }
  return d;
}

FockVector HeisenbergPoly::apply_to(const FockVector& v) const {
  FockVector out;
  for (const auto& [mu, c] : terms_) {
    for (const auto& [s, cv] : v.terms()) {
      out.add_term(FockState{s.charge, s.mu.union_with(mu)}, Rat(c * cv));
    }
  }
  return out;
}

}  // namespace cplstab

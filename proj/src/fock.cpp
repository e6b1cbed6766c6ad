#include "cplstab/fock.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace cplstab {

AffineWeight FockState::weight() const {
  Rat depth = make_rat(static_cast<long>(charge) * charge, 4) + Rat(mu.weight());
  return AffineWeight{1, charge, -depth};
}

bool FockState::operator<(const FockState& other) const {
  if (charge != other.charge) return charge < other.charge;
  return canonical_less(mu, other.mu);
}

FockVector FockVector::state(int charge, Partition mu, Rat coeff) {
  FockVector v;
  v.add_term(FockState{charge, std::move(mu)}, coeff);
  return v;
}

void FockVector::add_term(FockState s, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(s), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  r += o;
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r = *this;
  r -= o;
  return r;
}

FockVector FockVector::operator*(const Rat& c) const {
  FockVector r = *this;
  r *= c;
  return r;
}

FockVector FockVector::operator-() const { return *this * Rat(-1); }

std::optional<AffineWeight> FockVector::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  AffineWeight w = terms_.begin()->first.weight();
  for (const auto& [s, c] : terms_) {
    if (!(s.weight() == w)) return std::nullopt;
  }
  return w;
}

int FockVector::max_fock_degree() const {
  int d = 0;
  for (const auto& [s, c] : terms_) d = std::max(d, static_cast<int>(s.mu.weight()));
  return d;
}

int FockVector::max_abs_charge() const {
  int m = 0;
  for (const auto& [s, c] : terms_) m = std::max(m, std::abs(s.charge));
  return m;
}

std::string AlgebraGen::str() const {
  switch (kind) {
    case GenKind::X: return "x t^" + std::to_string(degree);
    case GenKind::Y: return "y t^" + std::to_string(degree);
    case GenKind::H: return "h t^" + std::to_string(degree);
    case GenKind::C: return "c";
    case GenKind::D: return "d";
  }
  return "?";
}

int fock_degree_cap() {
  static int cap = [] {
    if (const char* env = std::getenv("CPLSTAB_MAX_DEGREE")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 512;
  }();
  return cap;
}

namespace {

[[noreturn]] void throw_degree_cap(int degree) {
  throw std::runtime_error("fock degree " + std::to_string(degree) +
                           " exceeds the CPLSTAB_MAX_DEGREE cap of " +
                           std::to_string(fock_degree_cap()));
}

struct CreationTerm {
  Partition nu;
  Rat inv_z;    // 1 / (prod j^{m_j} m_j!)
  int length;   // number of parts
};

// Degree-a coefficients of the creation half of the vertex operator:
// exp(sum_k h[-k] z^k / k) = sum_nu (prod h[-nu_i]) / z_nu.
const std::vector<CreationTerm>& creation_terms(int a) {
  static std::mutex mu;
  static std::vector<std::vector<CreationTerm>> cache;
  std::scoped_lock lock(mu);
  while (static_cast<int>(cache.size()) <= a) {
    int n = static_cast<int>(cache.size());
    std::vector<CreationTerm> row;
    for (const Partition& nu : partitions_of(n)) {
      Int z = 1;
      int run_value = 0, run_len = 0;
      auto flush = [&] {
        for (int i = 1; i <= run_len; ++i) z *= run_value * i;
      };
      for (int p : nu.parts()) {
        if (p == run_value) {
          ++run_len;
        } else {
          flush();
          run_value = p;
          run_len = 1;
        }
      }
      flush();
      Rat inv_z = Rat(1) / Rat(z);
      row.push_back(CreationTerm{nu, inv_z, nu.support()});
    }
    cache.push_back(std::move(row));
  }
  return cache[a];
}

// Vertex-operator action of x t^j / y t^j on the charge-m block of v:
// annihilation layers (sub-multiset removal) followed by creation layers
// (multiplication by all partitions of the complementary degree).
void act_vertex(GenKind kind, int j, int charge,
                const std::vector<std::pair<const FockState*, const Rat*>>& block,
                FockVector& out) {
  const bool is_x = (kind == GenKind::X);
  const int delta = is_x ? (-j - charge - 1) : (-j + charge - 1);
  const int target = charge + (is_x ? 2 : -2);
  const long ann_factor = is_x ? -2 : 2;

  // annihilation output, keyed by removed degree b then by mu - kappa
  std::map<int, std::map<Partition, Rat, PartitionCanonicalLess>> layers;

  for (const auto& [state, coeff] : block) {
    const Partition& mu = state->mu;
    // distinct part values with multiplicities
    std::vector<std::pair<int, int>> vals;
    for (int p : mu.parts()) {
      if (!vals.empty() && vals.back().first == p) {
        ++vals.back().second;
      } else {
        vals.emplace_back(p, 1);
      }
    }
    // odometer over e_j = 0..m_j per distinct value
    std::vector<int> e(vals.size(), 0);
    while (true) {
      int removed = 0;
      Int ann = 1;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (e[i] > 0) {
          removed += e[i] * vals[i].first;
          Int f = binomial(static_cast<unsigned long>(vals[i].second),
                           static_cast<unsigned long>(e[i]));
          Int pw;
          mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(e[i]));
          if (ann_factor < 0 && e[i] % 2 == 1) f = -f;
          ann *= f * pw;
        }
      }
      if (delta + removed >= 0) {
        std::vector<int> rest;
        for (std::size_t i = 0; i < vals.size(); ++i) {
          for (int t = 0; t < vals[i].second - e[i]; ++t) rest.push_back(vals[i].first);
        }
        layers[removed][Partition(std::move(rest))] += *coeff * Rat(ann);
      }
      // advance odometer
      std::size_t i = 0;
      for (; i < e.size(); ++i) {
        if (e[i] < vals[i].second) {
          ++e[i];
          break;
        }
        e[i] = 0;
      }
      if (i == e.size()) break;
    }
  }

  for (auto& [b, layer] : layers) {
    int a = delta + b;
    if (a < 0) continue;
    const auto& creations = creation_terms(a);
    for (auto& [rho, c] : layer) {
      if (c == 0) continue;
      if (static_cast<int>(rho.weight()) + a > fock_degree_cap()) throw_degree_cap(static_cast<int>(rho.weight()) + a);
      for (const CreationTerm& ct : creations) {
        Rat cre = ct.inv_z;
        if (!is_x && ct.length % 2 == 1) cre = -cre;
        out.add_term(FockState{target, rho.union_with(ct.nu)}, c * cre);
      }
    }
  }
}

}  // namespace

FockVector act(const AlgebraGen& g, const FockVector& v) {
  FockVector out;
  switch (g.kind) {
    case GenKind::C:
      return v;
    case GenKind::D:
      for (const auto& [s, c] : v.terms()) {
        Rat eig = -(make_rat(static_cast<long>(s.charge) * s.charge, 4) + Rat(s.mu.weight()));
        out.add_term(s, c * eig);
      }
      return out;
    case GenKind::H: {
      if (g.degree == 0) {
        for (const auto& [s, c] : v.terms()) out.add_term(s, c * Rat(s.charge));
        return out;
      }
      if (g.degree < 0) {
        int part = -g.degree;
        for (const auto& [s, c] : v.terms()) {
          if (static_cast<int>(s.mu.weight()) + part > fock_degree_cap()) {
            throw_degree_cap(static_cast<int>(s.mu.weight()) + part);
          }
          out.add_term(FockState{s.charge, s.mu.with_part(part)}, c);
        }
        return out;
      }
      int part = g.degree;
      for (const auto& [s, c] : v.terms()) {
        int m = s.mu.mult(part);
        if (m == 0) continue;
        out.add_term(FockState{s.charge, s.mu.minus(Partition({part}))},
                     c * Rat(2L * part * m));
      }
      return out;
    }
    case GenKind::X:
    case GenKind::Y: {
      // group terms by charge
      std::map<int, std::vector<std::pair<const FockState*, const Rat*>>> blocks;
      for (const auto& [s, c] : v.terms()) blocks[s.charge].emplace_back(&s, &c);
      for (const auto& [charge, block] : blocks) act_vertex(g.kind, g.degree, charge, block, out);
      return out;
    }
  }
  return out;
}

FockVector act(const GenCombo& combo, const FockVector& v) {
  FockVector out;
  for (const auto& [g, c] : combo) {
    if (c == 0) continue;
    out += act(g, v) * c;
  }
  return out;
}

namespace {

Rat gen_form(GenKind a, GenKind b) {
  // normalized invariant form on the finite algebra: (x|y) = 1, (h|h) = 2
  if ((a == GenKind::X && b == GenKind::Y) || (a == GenKind::Y && b == GenKind::X)) return 1;
  if (a == GenKind::H && b == GenKind::H) return 2;
  return 0;
}

}  // namespace

GenCombo bracket(const AlgebraGen& a, const AlgebraGen& b) {
  if (a.kind == GenKind::C || b.kind == GenKind::C) return {};
  if (a.kind == GenKind::D && b.kind == GenKind::D) return {};
  if (a.kind == GenKind::D) return {{AlgebraGen{b.kind, b.degree}, Rat(b.degree)}};
  if (b.kind == GenKind::D) return {{AlgebraGen{a.kind, a.degree}, Rat(-a.degree)}};

  GenCombo out;
  int deg = a.degree + b.degree;
  auto finite_bracket = [&]() -> GenCombo {
    // [x,y] = h, [h,x] = 2x, [h,y] = -2y
    if (a.kind == b.kind) return {};
    if (a.kind == GenKind::X && b.kind == GenKind::Y) return {{gen_h(deg), Rat(1)}};
    if (a.kind == GenKind::Y && b.kind == GenKind::X) return {{gen_h(deg), Rat(-1)}};
    if (a.kind == GenKind::H && b.kind == GenKind::X) return {{gen_x(deg), Rat(2)}};
    if (a.kind == GenKind::X && b.kind == GenKind::H) return {{gen_x(deg), Rat(-2)}};
    if (a.kind == GenKind::H && b.kind == GenKind::Y) return {{gen_y(deg), Rat(-2)}};
    if (a.kind == GenKind::Y && b.kind == GenKind::H) return {{gen_y(deg), Rat(2)}};
    return {};
  };
  out = finite_bracket();
  if (a.degree == -b.degree) {
    Rat central = Rat(a.degree) * gen_form(a.kind, b.kind);
    if (central != 0) out.push_back({gen_c(), central});
  }
  return out;
}

FockVector apply_word(std::span<const WordFactor> word, const FockVector& v) {
  FockVector cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    for (unsigned s = 1; s <= it->power; ++s) {
      cur = act(it->gen, cur);
      if (s > 1) cur *= Rat(1, static_cast<long>(s));
      if (cur.is_zero()) return cur;
    }
  }
  return cur;
}

FockVector apply_word(std::initializer_list<WordFactor> word, const FockVector& v) {
  return apply_word(std::span<const WordFactor>(word.begin(), word.size()), v);
}

RelationReport check_relations(int degree_bound, int charge_bound, int m_range) {
  RelationReport report;
  std::vector<AlgebraGen> gens;
  for (int m = -m_range; m <= m_range; ++m) {
    gens.push_back(gen_x(m));
    gens.push_back(gen_y(m));
    gens.push_back(gen_h(m));
  }
  gens.push_back(gen_c());
  gens.push_back(gen_d());

  std::vector<FockVector> states;
  for (int m = -charge_bound; m <= charge_bound; ++m) {
    for (int d = 0; d <= degree_bound; ++d) {
      for (const Partition& mu : partitions_of(d)) {
        states.push_back(FockVector::state(m, mu));
      }
    }
  }

  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      GenCombo br = bracket(gens[i], gens[j]);
      for (const FockVector& s : states) {
        FockVector lhs = act(gens[i], act(gens[j], s)) - act(gens[j], act(gens[i], s));
        FockVector rhs = act(br, s);
        ++report.cases;
        if (!(lhs == rhs)) {
          if (report.violations.size() < 20) {
            report.violations.push_back("[" + gens[i].str() + ", " + gens[j].str() +
                                        "] mismatch on a state of charge " +
                                        std::to_string(s.terms().begin()->first.charge));
          } else if (report.violations.size() == 20) {
            report.violations.push_back("...");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace cplstab

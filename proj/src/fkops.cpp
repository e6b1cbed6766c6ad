#include "cplstab/fkops.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cplstab {

ModuleOperator ModuleOperator::exponential(AlgebraGen g, int sign) {
  if (g.kind != GenKind::X && g.kind != GenKind::Y) {
    throw std::invalid_argument("module operator exponentials take real-root generators");
  }
  ModuleOperator op;
  op.steps_.push_back(Step{g, sign >= 0 ? 1 : -1});
  return op;
}

ModuleOperator ModuleOperator::then(const ModuleOperator& next) const {
  ModuleOperator op = *this;
  op.steps_.insert(op.steps_.end(), next.steps_.begin(), next.steps_.end());
  return op;
}

ModuleOperator ModuleOperator::inverse() const {
  ModuleOperator op;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    op.steps_.push_back(Step{it->gen, -it->sign});
  }
  return op;
}

FockVector ModuleOperator::apply(const FockVector& v) const {
  FockVector cur = v;
  for (const Step& step : steps_) {
    if (cur.is_zero()) return cur;
    int cap = 2 * (cur.max_fock_degree() + cur.max_abs_charge() +
                   std::abs(step.gen.degree) + 4) + 8;
    FockVector acc = cur;
    FockVector term = cur;
    int p = 0;
    while (!term.is_zero()) {
      if (++p > cap) {
        throw std::runtime_error("exponential of " + step.gen.str() +
                                 " did not terminate within the nilpotency guard");
      }
      term = act(step.gen, term) * make_rat(step.sign, p);
      acc += term;
    }
    cur = std::move(acc);
  }
  return cur;
}

ModuleOperator reflection_operator(int gamma_sign, int k) {
  AlgebraGen e_alpha = gamma_sign >= 0 ? gen_x(k) : gen_y(k);
  AlgebraGen e_minus = gamma_sign >= 0 ? gen_y(-k) : gen_x(-k);
  // rightmost factor applies first
  return ModuleOperator::exponential(e_alpha, -1)
      .then(ModuleOperator::exponential(e_minus, +1))
      .then(ModuleOperator::exponential(e_alpha, -1));
}

ModuleOperator translation(int p) {
  static const ModuleOperator step = reflection_operator(+1, 0).then(reflection_operator(-1, 1));
  ModuleOperator op;
  ModuleOperator unit = p >= 0 ? step : step.inverse();
  for (int i = 0; i < std::abs(p); ++i) op = op.then(unit);
  return op;
}

AlgebraGen translate_generator(int p, const AlgebraGen& g) {
  if (g.kind == GenKind::X) return gen_x(g.degree - 2 * p);
  if (g.kind == GenKind::Y) return gen_y(g.degree + 2 * p);
  throw std::invalid_argument("adjoint translation is defined on x and y components only");
}

std::pair<IndexTriple, int> reduce_to_diagonal(const IndexTriple& xi) {
  require_member(xi);
  if (xi.n % 2 != 0) throw std::invalid_argument("diagonal reduction requires even n");
  if (!is_stable(xi)) throw std::invalid_argument("diagonal reduction requires a stable index");
  IndexTriple dagger{2 * (xi.n - xi.k), xi.n - xi.k, xi.lam};
  if (!dagger.valid() || !is_stable(dagger)) {
    throw std::runtime_error("reduced index " + dagger.str() + " failed stability");
  }
  return {dagger, xi.k - xi.n / 2};
}

GenCombo diagram_twist(const AlgebraGen& g) {
  switch (g.kind) {
    case GenKind::Y: return {{gen_x(g.degree - 1), Rat(1)}};
    case GenKind::X: return {{gen_y(g.degree + 1), Rat(1)}};
    case GenKind::H: {
      GenCombo out{{gen_h(g.degree), Rat(-1)}};
      if (g.degree == 0) out.push_back({gen_c(), Rat(1)});
      return out;
    }
    case GenKind::C: return {{gen_c(), Rat(1)}};
    case GenKind::D:
      throw std::invalid_argument("diagram twist of d is not needed and left undefined");
  }
  return {};
}

GenCombo transpose_twist(const AlgebraGen& g) {
  switch (g.kind) {
    case GenKind::X: return {{gen_y(g.degree), Rat(1)}};
    case GenKind::Y: return {{gen_x(g.degree), Rat(1)}};
    case GenKind::H: return {{gen_h(g.degree), Rat(-1)}};
    case GenKind::C: return {{gen_c(), Rat(1)}};
    case GenKind::D: return {{gen_d(), Rat(1)}};
  }
  return {};
}

GenCombo apply_twist(GenCombo (*twist)(const AlgebraGen&), const GenCombo& combo) {
  GenCombo out;
  for (const auto& [g, c] : combo) {
    for (const auto& [h, d] : twist(g)) {
      out.push_back({h, Rat(c * d)});
    }
  }
  return out;
}

namespace {

FockVector negate_charge(const FockVector& v, int required_parity, const char* who) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (((s.charge % 2) + 2) % 2 != required_parity) {
      throw std::invalid_argument(std::string(who) + " applies to the " +
                                  (required_parity == 0 ? "even" : "odd") + "-charge sector only");
    }
    Rat coeff = (s.mu.support() % 2 == 0) ? c : Rat(-c);
    out.add_term(FockState{-s.charge, s.mu}, coeff);
  }
  return out;
}

}  // namespace

FockVector intertwiner_G(const FockVector& v) { return negate_charge(v, 0, "intertwiner_G"); }

FockVector intertwiner_F(const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (((s.charge % 2) + 2) % 2 != 1) {
      throw std::invalid_argument("intertwiner_F applies to the odd-charge sector only");
    }
    out.add_term(FockState{s.charge - 1, s.mu}, c);
  }
  return out;
}

FockVector intertwiner_G_odd(const FockVector& v) {
  return negate_charge(v, 1, "intertwiner_G_odd");
}

}  // namespace cplstab

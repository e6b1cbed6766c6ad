#include "cplstab/weights.hpp"

#include <cassert>
#include <stdexcept>

namespace cplstab {

Rat form(const AffineWeight& a, const AffineWeight& b) {
  // (a|b) = aL*bd + ad*bL + aw*bw/2
  return Rat(a.L0) * b.d + a.d * Rat(b.L0) + make_rat(a.w1, 2) * Rat(b.w1);
}

AffineWeight translate(const AffineWeight& mu, const Rat& q) {
  Rat twice = Rat(2) * q;
  if (twice.get_den() != 1) {
    throw std::invalid_argument("translation step must lie in the half-integer lattice");
  }
  // t_alpha(mu) = mu + (mu|delta) alpha - [(mu|alpha) + (mu|delta)(alpha|alpha)/2] delta,
  // with alpha = q*alpha1, (mu|delta) = L0, (mu|alpha) = q*w1, (alpha|alpha) = 2q^2.
  AffineWeight r = mu;
  Rat shift = twice * Rat(mu.L0);       // coefficient of omega1 gained, = 2q*L0
  assert(shift.get_den() == 1);
  r.w1 += shift.get_num().get_si();
  r.d -= q * Rat(mu.w1) + q * q * Rat(mu.L0);
  return r;
}

AffineWeight reflect(const AffineWeight& mu, int i) {
  if (i == 1) return mu - wt_alpha1().scaled(mu.pair_h());
  if (i == 0) return mu - wt_alpha0().scaled(mu.pair_alpha0_check());
  throw std::invalid_argument("simple reflection index must be 0 or 1");
}

AffineWeight sigma(const AffineWeight& mu) {
  return reflect(translate(mu, make_rat(-1, 2)), 1);
}

AffineWeight weight_of_wn(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  AffineWeight via_translate = (n % 2 == 0)
      ? translate(wt_lambda0(), make_rat(n, 2))
      : translate(wt_lambda1(), make_rat(n - 1, 2));
  AffineWeight closed{1, n, make_rat(-static_cast<long>(n) * n, 4)};
  assert(via_translate == closed);
  return via_translate;
}

AffineWeight weight_of_cl(const IndexTriple& xi) {
  require_member(xi);
  AffineWeight base = (xi.n % 2 == 0)
      ? translate(wt_lambda0(), Rat(xi.k - xi.n / 2))
      : translate(wt_lambda1(), Rat(xi.k - (xi.n + 1) / 2));
  return base - wt_delta().scaled(xi.lam.weight());
}

std::string weight_str(const AffineWeight& mu) {
  return std::to_string(mu.L0) + "Λ0 + " + std::to_string(mu.w1) + "ω1 + (" +
         rat_str(mu.d) + ")δ";
}

}  // namespace cplstab

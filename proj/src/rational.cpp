#include "cplstab/rational.hpp"

#include <stdexcept>

namespace cplstab {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

Rat parse_rat(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) {
      throw std::invalid_argument("malformed rational literal: " + std::string(s));
    }
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), std::string(s).c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(s));
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  r.canonicalize();
  return r;
}

}  // namespace cplstab

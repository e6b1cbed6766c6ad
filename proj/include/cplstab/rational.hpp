#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cplstab {

// Exact rational scalar used everywhere; no floating point in the library.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// "p/q" with the "/q" omitted for integers.
std::string rat_str(const Rat& r);

// Parses the rat_str format; rejects anything else.
Rat parse_rat(std::string_view s);

}  // namespace cplstab

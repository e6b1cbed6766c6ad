#pragma once

#include <string>
#include <string_view>

#include "cplstab/fock.hpp"
#include "cplstab/heisenberg.hpp"
#include "cplstab/stability.hpp"

namespace cplstab {

// Text forms, e.g. "1/3·h[-3]·e{0} − 1/3·h[-1]^3·e{0}" for vectors and
// "1/2·h[-2] + 1/2·h[-1]^2" for polynomials; "0" for zero.
std::string to_text(const FockVector& v);
std::string to_text(const HeisenbergPoly& p);

// JSON forms with terms in canonical order; round-trips are bit-exact.
std::string to_json(const FockVector& v);
std::string to_json(const HeisenbergPoly& p);
std::string to_json(const AffineWeight& w);
std::string to_json(const StableBasisEntry& e);

FockVector vector_from_json(std::string_view json);
HeisenbergPoly poly_from_json(std::string_view json);

}  // namespace cplstab

#pragma once

#include <gmpxx.h>

#include <string>

namespace qsym {

// All coefficient arithmetic in this library is exact. Counts and matrix
// entries stay tiny at the scales we certify, but the contracts are stated
// over the integers, so we use arbitrary precision everywhere.
using Int = mpz_class;

inline std::string to_string(const Int& value) { return value.get_str(); }

inline bool fits_long(const Int& value) { return value.fits_slong_p(); }

}  // namespace qsym

#ifndef MATCHMONOID_INTEGER_HPP
#define MATCHMONOID_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace matchmonoid {

// Mobius values are arbitrary-precision so adversarial posets cannot
// overflow; every value arising at the scales exercised here fits in 64 bits.
using Integer = mpz_class;

inline bool fits_int64(const Integer& v) { return v.fits_slong_p(); }

inline std::string integer_str(const Integer& v) { return v.get_str(); }

}  // namespace matchmonoid

#endif

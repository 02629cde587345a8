#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace znz {

// Unbounded integers and rationals.  All arithmetic in this library is
// exact; there is no fixed-width fast path.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

// True when |v| < 2^53, i.e. v survives a round trip through a double
// (and through JSON tooling that parses numbers as doubles).
inline bool fits_json_number(const Int& v) {
    static const Int kSafe = Int(1) << 53;
    Int a = abs(v);
    return a < kSafe;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Narrowing helper for loop bounds that are mathematically small.
inline long to_long_checked(const Int& v, const char* what) {
    if (!v.fits_slong_p()) {
        throw std::overflow_error(std::string(what) + " does not fit in a machine word");
    }
    return v.get_si();
}

}  // namespace znz

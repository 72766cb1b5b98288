#ifndef DIHEDRAL_RATIONAL_HPP
#define DIHEDRAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace dihedral {

// Arbitrary-precision rational, the ground scalar for everything exact.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace dihedral

#endif

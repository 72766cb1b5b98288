#ifndef DIHEDRAL_ERRORS_HPP
#define DIHEDRAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dihedral {

// Inverting zero in the coefficient field.
struct ZeroInversion : std::domain_error {
    explicit ZeroInversion(const std::string& what) : std::domain_error(what) {}
};

// Composing Temperley-Lieb elements whose boundaries do not match.
struct StrandMismatch : std::invalid_argument {
    explicit StrandMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside the admissible range (e.g. a Jones-Wenzl index whose
// quantum divisor vanishes).
struct OutOfRange : std::out_of_range {
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// A graded quotient kept producing nonzero components past the degree where
// it must have died; indicates a broken relation set.
struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

// Bad command line usage (exit code 2 in the CLI).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dihedral

#endif

#ifndef SIGMALAB_ERRORS_HPP
#define SIGMALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigmalab {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected input: reversed interval endpoints, overlapping parts, mismatched
// horizons, out-of-range indices.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A configured exactness cap was exceeded (generator count, atom count for
// subset enumeration, piece count of a pointwise sweep, sequence horizon).
class CapError : public Error {
public:
  explicit CapError(const std::string& msg) : Error(msg) {}
};

// An internal cross-check failed. Seeing this means a bug, not bad input.
class InvariantError : public Error {
public:
  explicit InvariantError(const std::string& msg) : Error(msg) {}
};

} // namespace sigmalab

#endif

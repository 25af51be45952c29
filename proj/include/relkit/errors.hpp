#ifndef RELKIT_ERRORS_HPP
#define RELKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relkit {

/// Malformed input: dimension mismatch, bad rational, schema violation.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. affine hull of an
/// empty set).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The query point does not belong to the set. Normal cones and conic
/// hulls are undefined there; a PolyCone always contains 0 so returning an
/// empty cone is not an option.
class NotInSetError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

void require_dim(std::size_t got, std::size_t want, const char* what);

}  // namespace relkit

#endif  // RELKIT_ERRORS_HPP

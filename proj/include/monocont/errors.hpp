#pragma once

#include <stdexcept>
#include <string>

namespace monocont {

/// Base class for every numerical failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The argument lies inside the exclusion disk of a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// The argument violates a domain precondition (or a result overflowed).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A truncated sum, extrapolation or quadrature failed its stopping criterion.
class NonConvergence : public Error {
public:
    using Error::Error;
};

}  // namespace monocont

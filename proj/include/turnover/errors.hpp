#pragma once

#include <stdexcept>
#include <string>

namespace turnover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the formula being evaluated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A root-finding bracket does not straddle a sign change.
class BracketError : public Error {
public:
    using Error::Error;
};

/// An iterative method ran out of iterations or subdivisions.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A proved inequality failed numerically; this points at a quadrature
/// or transcription bug rather than at the input.
class InequalityViolation : public Error {
public:
    using Error::Error;
};

}  // namespace turnover

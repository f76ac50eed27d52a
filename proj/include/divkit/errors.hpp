#pragma once

#include <stdexcept>
#include <string>

namespace divkit {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation point outside (or on the boundary of) an open domain.
class DomainError : public Error {
    using Error::Error;
};

/// Vector length mismatch between paired arguments.
class ShapeError : public Error {
    using Error::Error;
};

/// Scalar parameter outside its admissible range (alpha, weights, trials...).
class ParameterError : public Error {
    using Error::Error;
};

/// Numeric derivative inversion failed to bracket or refine a root.
class ConvergenceError : public Error {
    using Error::Error;
};

/// A mathematically non-negative quantity came out below round-off slack.
class NumericalError : public Error {
    using Error::Error;
};

/// Total masses of two vectors differ beyond tolerance where equality is required.
class MassMismatchError : public Error {
    using Error::Error;
};

/// Lookup of an unregistered generator or divergence name.
class UnknownNameError : public Error {
    using Error::Error;
};

class IoError : public Error {
    using Error::Error;
};

class ParseError : public Error {
    using Error::Error;
};

/// Non-finite numeric entry in parsed input.
class ValueError : public Error {
    using Error::Error;
};

} // namespace divkit

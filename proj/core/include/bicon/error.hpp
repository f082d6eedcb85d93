#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicon {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression text could not be parsed; `offset` is the byte offset into the
// expression string where the problem was detected.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
    std::size_t offset;
};

// Config file violates the schema (missing key, bad value, unknown section).
struct ConfigError : Error {
    using Error::Error;
};

// Evaluation left the domain of an elementary function (log of a non-positive
// value, division by zero, ...) or produced non-finite coefficients.
struct DomainError : Error {
    using Error::Error;
};

// Shape, order, or variance contract violation (programming error class).
struct DimensionError : Error {
    using Error::Error;
};

// Numerically singular matrix (metric or Gram) at a sampled point.
struct SingularError : Error {
    using Error::Error;
};

// Distribution degenerate at a point: null one-form, rank-deficient span, or
// singular Gram matrix. Analysis records these as skipped points.
struct DegenerateError : Error {
    using Error::Error;
};

// Distribution is not involutive: no foliation exists, analysis aborts.
struct InvolutivityError : Error {
    using Error::Error;
};

}  // namespace bicon

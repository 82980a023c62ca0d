#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bidiag {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input sequences have inconsistent lengths (e must have one entry fewer than q).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A matrix parameter is zero or negative.
struct NonPositiveEntry : Error {
    using Error::Error;
};

/// A matrix parameter is NaN or infinite.
struct NonFiniteEntry : Error {
    using Error::Error;
};

/// A computed quantity left the representable range of binary64.
struct OverflowError : Error {
    using Error::Error;
};

/// Factorial or binomial scaling exceeded the numeric range; `order` is the
/// first power at which the computation became unrepresentable.
struct FactorialOverflow : OverflowError {
    FactorialOverflow(const std::string& what, int failing_order)
        : OverflowError(what), order(failing_order) {}
    int order;
};

/// A brute-force enumeration would exceed the configured term budget.
struct ComplexityGuard : Error {
    using Error::Error;
};

/// A theta sequence decreased beyond the rounding slack, which signals
/// numeric breakdown of the selected trace backend.
struct MonotonicityViolation : Error {
    using Error::Error;
};

/// Malformed matrix text; `line` is 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t at_line)
        : Error(what), line(at_line) {}
    std::size_t line;
};

/// File could not be opened or read.
struct FileError : Error {
    using Error::Error;
};

}  // namespace bidiag

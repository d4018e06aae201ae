#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lacunary {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value is outside the domain of an operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// a_n^{1+beta} is not an integer at some step of a schedule.
class NonIntegralExponent : public Error {
public:
    NonIntegralExponent(std::size_t index, const std::string& what)
        : Error(what), index_(index) {}
    /// Index of the first exponent that is not an integer.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// An exponent or a power g^{a_n} is past the configured size budget.
class ExponentBudgetExceeded : public Error {
public:
    ExponentBudgetExceeded(std::size_t index, const std::string& what)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class PrecisionUnattainable : public Error {
public:
    using Error::Error;
};

/// An enclosure is too wide to decide the requested comparison.
class InsufficientDepth : public Error {
public:
    using Error::Error;
};

class NoSignChange : public Error {
public:
    using Error::Error;
};

/// The index lies outside the range where a bound is established (quotient, n = 1).
class RestrictedIndex : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; this is always a bug or a hardware fault.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace lacunary

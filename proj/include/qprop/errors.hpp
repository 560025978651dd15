#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qprop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation called outside its mathematical domain (inverse of zero, undefined axis, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// euler_form (or any axis extraction) on a quaternion with no vector part.
class DegenerateAxisError : public DomainError {
public:
    using DomainError::DomainError;
};

class BasisError : public Error {
public:
    enum class Kind { NotPure, NotUnit, NotOrthogonal };

    BasisError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Class parameters inconsistent with the tag, or producing an indefinite covariance.
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what, double min_eigenvalue = 0.0)
        : Error(what), min_eigenvalue_(min_eigenvalue) {}

    /// Most negative eigenvalue of the rejected Γ_R (0 when not applicable).
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

/// Bad input data: malformed CSV rows, too few samples, degenerate covariance.
class DataError : public Error {
public:
    explicit DataError(const std::string& what, std::size_t line = 0)
        : Error(what), line_(line) {}

    /// 1-based input line, 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace qprop

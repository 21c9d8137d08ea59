#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace massgate {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pivot fell below the singularity floor during tridiagonal elimination.
class SingularPivot : public Error {
public:
    SingularPivot(std::size_t row, double pivot)
        : Error("singular pivot " + std::to_string(pivot) + " at row " + std::to_string(row)),
          row_(row), pivot_(pivot) {}

    std::size_t row() const noexcept { return row_; }
    double pivot() const noexcept { return pivot_; }

private:
    std::size_t row_;
    double pivot_;
};

/// Raised by the time stepper when the linear solve fails.
class SolverFailure : public Error {
public:
    using Error::Error;
};

/// A configuration value violates its invariant. `key()` names the offending field.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error("config key '" + key + "': " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// More numeric switch events than the closed form allows within the horizon.
class OracleMismatch : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace massgate

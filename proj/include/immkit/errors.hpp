#pragma once

#include <stdexcept>
#include <string>

namespace immkit {

/// Raised when a computation would exceed a configured size cap
/// (permutation enumeration, path-family enumeration, Bruhat ideals).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by factor_to_network when elimination meets a negative multiplier
/// or a zero pattern outside the supported class.
class NotFactorableError : public std::runtime_error {
public:
    NotFactorableError(const std::string& what, int pivot_row, int pivot_col)
        : std::runtime_error(what), row_(pivot_row), col_(pivot_col) {}

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_;
    int col_;
};

class DivisionByZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace immkit

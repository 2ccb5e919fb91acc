#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "immkit/rational.hpp"

namespace immkit {

/// Square matrix of exact rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n);  // zero matrix
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static ExactMatrix identity(int n);

    int size() const noexcept { return n_; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }

    /// Submatrix on the given (sorted) row and column indices.
    std::vector<std::vector<Rational>> submatrix(std::span<const int> rows, std::span<const int> cols) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Rational> data_;
};

/// Determinant of an arbitrary square rational array by fraction-free
/// (Bareiss) elimination after clearing row denominators.
Rational determinant(const std::vector<std::vector<Rational>>& rows);
Rational determinant(const ExactMatrix& a);

/// Determinant of the principal submatrix on the bit set `mask`.
Rational principal_minor(const ExactMatrix& a, std::uint32_t mask);

/// Every minor det(A_{I,J}) with |I| = |J| >= 1 is nonnegative.
bool is_totally_nonnegative(const ExactMatrix& a);

/// Every minor is strictly positive.
bool is_totally_positive(const ExactMatrix& a);

}  // namespace immkit

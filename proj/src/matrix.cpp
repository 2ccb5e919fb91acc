#include "immkit/matrix.hpp"

#include <bit>
#include <stdexcept>

namespace immkit {

ExactMatrix::ExactMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), 0) {
    if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row);
    *this = from_rows(r);
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<std::vector<Rational>> ExactMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows.size());
    for (int r : rows) {
        auto& row = out.emplace_back();
        row.reserve(cols.size());
        for (int c : cols) row.push_back((*this)(r, c));
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    ExactMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Rational determinant(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    // Clear denominators row by row, then run integer Bareiss.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("determinant requires a square matrix");
        Integer l = 1;
        for (const auto& q : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    Rational det(m[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

Rational determinant(const ExactMatrix& a) {
    std::vector<int> idx(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return determinant(a.submatrix(idx, idx));
}

Rational principal_minor(const ExactMatrix& a, std::uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < a.size(); ++i)
        if (mask >> i & 1U) idx.push_back(i);
    return determinant(a.submatrix(idx, idx));
}

namespace {

template <typename Accept>
bool all_minors(const ExactMatrix& a, Accept accept) {
    const int n = a.size();
    if (n > 20) throw std::invalid_argument("minor scan limited to n <= 20");
    const std::uint32_t full = n == 0 ? 0 : (1U << n);
    for (std::uint32_t rmask = 1; rmask < full; ++rmask) {
        std::vector<int> rows;
        for (int i = 0; i < n; ++i)
            if (rmask >> i & 1U) rows.push_back(i);
        for (std::uint32_t cmask = 1; cmask < full; ++cmask) {
            if (std::popcount(cmask) != static_cast<int>(rows.size())) continue;
            std::vector<int> cols;
            for (int j = 0; j < n; ++j)
                if (cmask >> j & 1U) cols.push_back(j);
            if (!accept(determinant(a.submatrix(rows, cols)))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_totally_nonnegative(const ExactMatrix& a) {
    return all_minors(a, [](const Rational& d) { return d >= 0; });
}

bool is_totally_positive(const ExactMatrix& a) {
    return all_minors(a, [](const Rational& d) { return d > 0; });
}

}  // namespace immkit

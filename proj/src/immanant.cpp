#include "immkit/immanant.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "immkit/errors.hpp"

namespace immkit {

Partition cycle_type(std::span<const int> perm) {
    const std::size_t n = perm.size();
    std::vector<char> seen(n, 0);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

std::vector<Rational> class_sums(const ExactMatrix& a, int cap) {
    const int n = a.size();
    if (n < 1) throw std::invalid_argument("immanants need n >= 1");
    if (n > cap)
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the permutation cap " + std::to_string(cap));
    std::vector<Rational> sums(partitions_of(n).size(), 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<Rational> prefix(static_cast<std::size_t>(n) + 1);
    prefix[0] = 1;
    std::uint32_t used = 0;
    // Depth-first over rows; zero partial products prune the subtree.
    std::function<void(int)> descend = [&](int row) {
        if (row == n) {
            sums[partition_index(cycle_type(perm))] += prefix[static_cast<std::size_t>(n)];
            return;
        }
        for (int col = 0; col < n; ++col) {
            if (used >> col & 1U) continue;
            const Rational& entry = a(row, col);
            if (entry == 0) continue;
            prefix[static_cast<std::size_t>(row) + 1] = prefix[static_cast<std::size_t>(row)] * entry;
            perm[static_cast<std::size_t>(row)] = col;
            used |= 1U << col;
            descend(row + 1);
            used &= ~(1U << col);
        }
    };
    descend(0);
    return sums;
}

Rational immanant_from_class_sums(const TraceVector& theta, const std::vector<Rational>& sums) {
    if (theta.values().size() != sums.size()) throw std::invalid_argument("trace degree does not match the matrix");
    Rational total = 0;
    for (std::size_t i = 0; i < sums.size(); ++i)
        if (sums[i] != 0 && theta.at(i) != 0) total += theta.at(i) * sums[i];
    return total;
}

Rational immanant(const TraceVector& theta, const ExactMatrix& a, int cap) {
    if (theta.degree() != a.size())
        throw std::invalid_argument("trace degree " + std::to_string(theta.degree()) + " does not match matrix size " +
                                    std::to_string(a.size()));
    return immanant_from_class_sums(theta, class_sums(a, cap));
}

Rational permanent(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) return 1;
    if (n > 30) throw ResourceLimitError("permanent limited to n <= 30");
    std::vector<Rational> row_sums(static_cast<std::size_t>(n), 0);
    Rational total = 0;
    std::uint64_t gray = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int bit = std::countr_zero(k);
        const bool adding = !(gray >> bit & 1U);
        gray ^= std::uint64_t{1} << bit;
        for (int i = 0; i < n; ++i) {
            if (adding) row_sums[static_cast<std::size_t>(i)] += rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(bit)];
            else row_sums[static_cast<std::size_t>(i)] -= rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(bit)];
        }
        Rational prod = 1;
        for (const auto& s : row_sums) {
            if (s == 0) {
                prod = 0;
                break;
            }
            prod *= s;
        }
        // sign (-1)^{n - |S|}
        if ((n - std::popcount(gray)) % 2) total -= prod;
        else total += prod;
    }
    return total;
}

Rational permanent(const ExactMatrix& a) {
    std::vector<int> idx(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return permanent(a.submatrix(idx, idx));
}

namespace {

// Sum over ordered set partitions of [n] into blocks of sizes lambda_1, ...,
// lambda_l of the product of block_value(block mask).
Rational ordered_block_sum(const Partition& lambda, int n, const std::function<Rational(std::uint32_t)>& block_value) {
    if (lambda.size() != n) throw std::invalid_argument("partition size must equal the matrix dimension");
    if (n > 20) throw ResourceLimitError("LMW expansion limited to n <= 20");
    std::vector<Rational> memo(std::size_t{1} << n);
    std::vector<char> known(std::size_t{1} << n, 0);
    auto value = [&](std::uint32_t mask) -> const Rational& {
        if (!known[mask]) {
            memo[mask] = block_value(mask);
            known[mask] = 1;
        }
        return memo[mask];
    };
    std::function<Rational(std::size_t, std::uint32_t)> rec = [&](std::size_t block, std::uint32_t free) -> Rational {
        if (block == static_cast<std::size_t>(lambda.length())) return 1;
        const int want = lambda[block];
        Rational total = 0;
        // iterate submasks of `free` with popcount `want`
        for (std::uint32_t sub = free; sub; sub = (sub - 1) & free) {
            if (std::popcount(sub) != want) continue;
            const Rational& v = value(sub);
            if (v == 0) continue;
            total += v * rec(block + 1, free & ~sub);
        }
        return total;
    };
    return rec(0, n == 32 ? ~0U : ((1U << n) - 1));
}

}  // namespace

Rational lmw_sign(const Partition& lambda, const ExactMatrix& a) {
    return ordered_block_sum(lambda, a.size(), [&](std::uint32_t mask) { return principal_minor(a, mask); });
}

Rational lmw_trivial(const Partition& lambda, const ExactMatrix& a) {
    return ordered_block_sum(lambda, a.size(), [&](std::uint32_t mask) {
        std::vector<int> idx;
        for (int i = 0; i < a.size(); ++i)
            if (mask >> i & 1U) idx.push_back(i);
        return permanent(a.submatrix(idx, idx));
    });
}

Rational normalized_immanant(const TraceVector& theta, const ExactMatrix& a, int cap) {
    if (theta.at_identity() == 0) throw DivisionByZeroError("trace vanishes at the identity");
    return immanant(theta, a, cap) / theta.at_identity();
}

std::vector<Rational> hook_chain(const ExactMatrix& a, int cap) {
    const int n = a.size();
    const auto sums = class_sums(a, cap);
    std::vector<Rational> chain;
    chain.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        const TraceVector chi = irreducible_character(Partition::hook(n, k));
        chain.push_back(immanant_from_class_sums(chi, sums) / Rational(binomial(n - 1, k - 1)));
    }
    return chain;
}

}  // namespace immkit

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "immkit/partition.hpp"

namespace immkit {

/// Permutation of {0..n-1} in one-line notation. Text forms are 1-based.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless the images form a bijection.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation longest(int n);  // n-1, ..., 0

    int size() const noexcept { return static_cast<int>(w_.size()); }
    int operator[](std::size_t i) const { return w_[i]; }
    const std::vector<int>& images() const noexcept { return w_; }
    Permutation inverse() const;
    Partition cycle_type() const;
    /// "34521" when n <= 9, otherwise comma separated.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

/// Inverse of to_string; also accepts "3,4,5,2,1".
Permutation parse_permutation(std::string_view text);

/// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// No i < j < k with w_j < w_k < w_i.
bool avoids_312(const Permutation& w);

/// All permutations of n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace immkit

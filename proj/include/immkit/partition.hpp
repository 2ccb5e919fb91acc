#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "immkit/rational.hpp"

namespace immkit {

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
/// Immutable after construction.
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Sorts the parts into weakly decreasing order and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);
    /// The hook k 1^{n-k}.
    static Partition hook(int n, int k);
    /// The single column 1^n.
    static Partition column(int n);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// Part i (0-based), or 0 past the end.
    int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    /// Number of parts equal to i.
    int multiplicity(int i) const;
    bool is_hook() const noexcept;

    /// "4,1,1"; the empty partition prints as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., 1^n.
/// This order refines reverse dominance, so matrices indexed by it that are
/// triangular in dominance order (Kostka) are upper triangular.
/// Throws std::invalid_argument for n < 1.
const std::vector<Partition>& partitions_of(int n);

/// Position of lambda in partitions_of(|lambda|).
std::size_t partition_index(const Partition& lambda);

Partition transpose(const Partition& lambda);

/// z_lambda = prod parts * prod multiplicities!; n!/z_lambda is the size of
/// the conjugacy class of cycle type lambda.
Integer z_value(const Partition& lambda);

/// Number of semistandard tableaux of shape lambda and content mu, counted by
/// exhaustive backtracking. Throws std::invalid_argument if |lambda| != |mu|.
Integer kostka(const Partition& lambda, const Partition& mu);

/// Number of standard Young tableaux (hook length formula).
Integer syt_count(const Partition& lambda);

/// True iff mu dominates lambda: every partial sum of lambda is at most the
/// corresponding partial sum of mu. Throws on different sizes.
bool majorizes(const Partition& mu, const Partition& lambda);

/// Moves the rightmost column of the diagram into the first column.
/// Throws std::invalid_argument on 1^n.
Partition pate_successor(const Partition& lambda);

/// Parses "4,1,1", "411" (single digits only) or "(4,1,1)".
Partition parse_partition(std::string_view text);

}  // namespace immkit

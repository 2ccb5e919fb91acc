#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "immkit/graph.hpp"
#include "immkit/matrix.hpp"
#include "immkit/permutation.hpp"

namespace immkit {

class Rng;

/// Finite poset on 0..n-1 (n <= 32), stored as the strict order closed
/// under transitivity. up(i) is the bit set of j with i < j.
class Poset {
public:
    Poset() = default;
    /// Relations (i, j) mean i < j. Applies transitive closure; throws
    /// std::invalid_argument on a cycle or out-of-range element.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& relations);
    static Poset chain(int n);
    static Poset antichain(int n);

    int size() const noexcept { return n_; }
    bool less(int i, int j) const { return up_[static_cast<std::size_t>(i)] >> j & 1U; }
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
    std::uint32_t up(int i) const { return up_[static_cast<std::size_t>(i)]; }
    std::uint32_t down(int i) const;
    /// All pairs (i, j) with i < j in the order, sorted.
    std::vector<std::pair<int, int>> relations() const;
    /// Element x of this poset becomes element label[x] of the result.
    Poset relabel(const Permutation& label) const;
    /// Induced subposet on the given elements, renumbered in the given order.
    Poset induced(const std::vector<int>& elements) const;
    /// i < j in the order implies i < j as integers.
    bool naturally_labeled() const;

    friend bool operator==(const Poset&, const Poset&) = default;
    friend auto operator<=>(const Poset&, const Poset&) = default;

private:
    int n_ = 0;
    std::vector<std::uint32_t> up_;
};

/// No induced 4-element subposet isomorphic to 3+1.
bool is_3plus1_free(const Poset& p);
/// No induced 4-element subposet isomorphic to 3+1 or 2+2.
bool is_unit_interval_order(const Poset& p);

Graph incomparability_graph(const Poset& p);

/// beta(y) = #{x <= y} - #{z >= y}.
std::vector<int> beta_statistic(const Poset& p);

/// Orders two elements with equal beta; returns true if a goes first.
using TieBreak = std::function<bool(const Poset&, int, int)>;
/// Smaller down-set first, then smaller element id.
bool default_tie_break(const Poset& p, int a, int b);

struct UioLabeling {
    std::vector<int> beta;    // on the original elements
    Permutation labeling;     // original element -> new label
    Poset labeled;            // the relabelled poset
    Permutation w;            // 312-avoiding
    std::vector<Permutation> ideal;  // Bruhat lower interval of w
};

/// Relabels a unit interval order by weakly increasing beta, reads off w(P)
/// and materializes {v <= w}. Throws std::invalid_argument if p is not a
/// unit interval order and ResourceLimitError if n exceeds ideal_cap.
UioLabeling algorithm_P_to_C(const Poset& p, const TieBreak& tie = default_tie_break, int ideal_cap = 8);

/// Only steps 1-3 (no ideal).
Permutation uio_permutation(const Poset& p, const TieBreak& tie = default_tie_break);

/// a_{ij} = 0 if i < j in P, else 1. Throws std::invalid_argument unless
/// beta is weakly increasing in the labels.
ExactMatrix antiadjacency(const Poset& labeled);

/// Unit interval orders on n elements up to isomorphism, each labeled so
/// that beta is weakly increasing. There are Catalan(n) of them.
std::vector<Poset> enumerate_uios(int n);

/// Canonical representative of the isomorphism class (lexicographically
/// smallest relation set over all relabelings). Practical for n <= 8.
Poset canonical_form(const Poset& p);

/// All posets on n elements up to isomorphism, as naturally labeled
/// canonical representatives. Throws ResourceLimitError for n > 6.
std::vector<Poset> enumerate_posets(int n);

/// Naturally labeled random poset: each pair i < j is related with
/// probability num/den before closure.
Poset random_poset(int n, Rng& rng, int num = 1, int den = 3);

}  // namespace immkit

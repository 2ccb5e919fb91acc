// Small hand-checked examples shared by several test files.
#pragma once

#include "immkit/network.hpp"
#include "immkit/poset.hpp"

namespace fixtures {

/// Five-element unit interval order 1<4, 1<5, 2<5 (0-based below).
inline immkit::Poset staircase_poset() { return immkit::Poset::from_relations(5, {{0, 3}, {0, 4}, {1, 4}}); }

/// Five-element poset with 1<3<5, 1<4, 2<4, 2<5.
inline immkit::Poset tableau_poset() {
    return immkit::Poset::from_relations(5, {{0, 2}, {2, 4}, {0, 3}, {1, 3}, {1, 4}});
}

/// Weights of the three-source network below, in the order a..h.
struct Weights {
    immkit::Rational a, b, c, d, e, f, g, h;
};

/// Three-source network with ten vertices:
/// s1=0, s2=1, s3=2, u=3, v=4, x=5, y=6, t1=7, t2=8, t3=9.
/// Edge indices are fixed and used by the tests.
inline immkit::PlanarNetwork three_source_network(const Weights& w) {
    using immkit::NetworkEdge;
    using immkit::Rational;
    std::vector<NetworkEdge> edges = {
        {2, 3, w.d},          // 0: s3 -> u
        {2, 4, Rational(1)},  // 1: s3 -> v
        {1, 4, Rational(1)},  // 2: s2 -> v
        {1, 5, w.a},          // 3: s2 -> x
        {0, 5, Rational(1)},  // 4: s1 -> x
        {4, 3, w.e},          // 5: v -> u
        {4, 6, w.f},          // 6: v -> y
        {5, 6, w.b},          // 7: x -> y
        {5, 8, w.c},          // 8: x -> t2
        {5, 7, Rational(1)},  // 9: x -> t1
        {3, 9, w.g},          // 10: u -> t3
        {3, 6, Rational(1)},  // 11: u -> y
        {6, 9, w.h},          // 12: y -> t3
        {6, 8, Rational(1)},  // 13: y -> t2
    };
    return immkit::PlanarNetwork(10, std::move(edges), {0, 1, 2}, {7, 8, 9});
}

/// Entry formulas of its path matrix.
inline immkit::ExactMatrix three_source_matrix(const Weights& w) {
    return immkit::ExactMatrix{
        {1, w.b + w.c, w.b * w.h},
        {w.a, w.a * w.b + w.a * w.c + w.e + w.f, w.a * w.b * w.h + w.e * w.g + w.e * w.h + w.f * w.h},
        {0, w.d + w.e + w.f, w.d * w.g + w.d * w.h + w.e * w.g + w.e * w.h + w.f * w.h},
    };
}

}  // namespace fixtures

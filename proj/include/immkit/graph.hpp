#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace immkit {

/// Simple undirected graph on vertices 0..n-1 (n <= 32), adjacency as bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on loops, out-of-range vertices or n > 32.
    /// Repeated edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph complete(int n);
    static Graph path(int n);

    int size() const noexcept { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)] >> v & 1U; }
    std::uint32_t neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;
    /// Induced subgraph on the vertex bit set, relabelled 0..k-1 in order.
    Graph induced(std::uint32_t mask) const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint32_t> adj_;
};

}  // namespace immkit

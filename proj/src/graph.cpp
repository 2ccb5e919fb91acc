#include "immkit/graph.hpp"

#include <bit>
#include <stdexcept>

namespace immkit {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 32) throw std::invalid_argument("graph size must be in 0..32");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graphs must not have loops");
        g.adj_[static_cast<std::size_t>(u)] |= 1U << v;
        g.adj_[static_cast<std::size_t>(v)] |= 1U << u;
    }
    return g;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return from_edges(n, e);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return from_edges(n, e);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
}

Graph Graph::induced(std::uint32_t mask) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (mask >> v & 1U) keep.push_back(v);
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) g.adj_[i] |= 1U << j;
    return g;
}

}  // namespace immkit

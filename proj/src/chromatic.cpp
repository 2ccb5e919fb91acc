#include "immkit/chromatic.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace immkit {
namespace {

class ColoringCounter {
public:
    ColoringCounter(const Graph& g, const Partition& lambda)
        : g_(g), remaining_(lambda.parts()), colour_(static_cast<std::size_t>(g.size()), -1) {}

    Integer run() {
        count_ = 0;
        place(0);
        return count_;
    }

private:
    void place(int v) {
        if (v == g_.size()) {
            ++count_;
            return;
        }
        for (std::size_t c = 0; c < remaining_.size(); ++c) {
            if (remaining_[c] == 0) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (colour_[static_cast<std::size_t>(u)] == static_cast<int>(c) && g_.adjacent(u, v)) ok = false;
            if (!ok) continue;
            --remaining_[c];
            colour_[static_cast<std::size_t>(v)] = static_cast<int>(c);
            place(v + 1);
            colour_[static_cast<std::size_t>(v)] = -1;
            ++remaining_[c];
        }
    }

    const Graph& g_;
    std::vector<int> remaining_;
    std::vector<int> colour_;
    Integer count_;
};

bool independent(const Graph& g, std::uint32_t set) {
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (g.neighbours(v) & set) return false;
    }
    return true;
}

std::uint32_t neighbourhood(const Graph& g, std::uint32_t set) {
    std::uint32_t out = 0;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) out |= g.neighbours(std::countr_zero(rest));
    return out;
}

// Acyclic orientations of G[w] whose source set is exactly t. Peeling off the
// sources leaves an acyclic orientation of G[w \ t] whose own sources all
// receive an edge from t.
class SourceCounter {
public:
    explicit SourceCounter(const Graph& g) : g_(g) {}

    Integer exact(std::uint32_t w, std::uint32_t t) {
        if (t == w) return 1;
        std::uint64_t key = static_cast<std::uint64_t>(w) << 32 | t;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::uint32_t rest = w & ~t;
        std::uint32_t allowed = rest & neighbourhood(g_, t);
        Integer total = 0;
        for (std::uint32_t sub = allowed; sub != 0; sub = (sub - 1) & allowed)
            if (independent(g_, sub)) total += exact(rest, sub);
        memo_.emplace(key, total);
        return total;
    }

private:
    const Graph& g_;
    std::unordered_map<std::uint64_t, Integer> memo_;
};

std::uint32_t full_mask(int n) { return n == 32 ? ~0U : (1U << n) - 1U; }

void check_small(const Graph& g) {
    if (g.size() > 20) throw std::invalid_argument("graph too large for subset enumeration");
}

}  // namespace

Integer colorings_of_type(const Graph& g, const Partition& lambda) {
    if (lambda.size() != g.size()) throw std::invalid_argument("coloring type must partition the vertex count");
    return ColoringCounter(g, lambda).run();
}

SymmetricFunction chromatic_symmetric_function(const Graph& g) {
    static std::mutex mutex;
    static std::map<Graph, SymmetricFunction> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(g); it != cache.end()) return it->second;
    }
    const int n = g.size();
    const auto& parts = partitions_of(n);
    std::vector<Rational> coeffs;
    coeffs.reserve(parts.size());
    for (const auto& lambda : parts) coeffs.emplace_back(colorings_of_type(g, lambda));
    SymmetricFunction x(n, Basis::monomial, std::move(coeffs));
    std::lock_guard lock(mutex);
    cache.emplace(g, x);
    return x;
}

Rational trace_of_graph(const TraceVector& theta, const SymmetricFunction& chromatic) {
    if (chromatic.basis() != Basis::monomial || chromatic.degree() != theta.degree())
        throw std::invalid_argument("expected a monomial expansion of matching degree");
    SymmetricFunction a = convert(frobenius(theta), Basis::elementary);
    Rational total = 0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) total += a.coeffs()[i] * chromatic.coeffs()[i];
    return total;
}

Rational trace_of_graph(const TraceVector& theta, const Graph& g) {
    if (theta.degree() != g.size()) throw std::invalid_argument("trace degree must equal the vertex count");
    return trace_of_graph(theta, chromatic_symmetric_function(g));
}

std::vector<Integer> acyclic_orientation_source_counts(const Graph& g) {
    check_small(g);
    const int n = g.size();
    std::vector<Integer> counts(static_cast<std::size_t>(n));
    if (n == 0) return counts;
    SourceCounter counter(g);
    const std::uint32_t all = full_mask(n);
    for (std::uint32_t t = all; t != 0; t = (t - 1) & all)
        if (independent(g, t)) counts[static_cast<std::size_t>(std::popcount(t) - 1)] += counter.exact(all, t);
    return counts;
}

Integer acyclic_orientations_with_sources(const Graph& g, int l) {
    if (l < 1 || l > g.size()) throw std::invalid_argument("source count must lie in 1..n");
    return acyclic_orientation_source_counts(g)[static_cast<std::size_t>(l - 1)];
}

Integer acyclic_orientation_count(const Graph& g) {
    Integer total = 0;
    for (const auto& c : acyclic_orientation_source_counts(g)) total += c;
    return g.size() == 0 ? Integer(1) : total;
}

Integer induced_acyclic_sequences(const Graph& g, const Partition& lambda) {
    check_small(g);
    const int n = g.size();
    if (lambda.size() > n) return 0;
    // ao[s] = acyclic orientations of G[s], by deleting a nonempty independent
    // set of sources with inclusion-exclusion.
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Integer> ao(subsets);
    ao[0] = 1;
    for (std::uint32_t s = 1; s < subsets; ++s) {
        Integer total = 0;
        for (std::uint32_t sub = s; sub != 0; sub = (sub - 1) & s) {
            if (!independent(g, sub)) continue;
            if (std::popcount(sub) % 2 == 1)
                total += ao[s & ~sub];
            else
                total -= ao[s & ~sub];
        }
        ao[s] = total;
    }
    const auto& parts = lambda.parts();
    std::map<std::pair<std::size_t, std::uint32_t>, Integer> memo;
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> Integer {
        if (i == parts.size()) return 1;
        auto key = std::make_pair(i, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const std::uint32_t free = full_mask(n) & ~used;
        Integer total = 0;
        for (std::uint32_t sub = free; sub != 0; sub = (sub - 1) & free)
            if (std::popcount(sub) == parts[i]) total += ao[sub] * self(self, i + 1, used | sub);
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, 0, 0);
}

}  // namespace immkit

#include "immkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "immkit/errors.hpp"
#include "immkit/rng.hpp"

namespace immkit {

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
    if (n < 0 || n > 32) throw std::invalid_argument("poset size must be in 0..32");
    Poset p;
    p.n_ = n;
    p.up_.assign(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : relations) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("relation element out of range");
        p.up_[static_cast<std::size_t>(i)] |= 1U << j;
    }
    // Warshall closure on bit rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.up_[static_cast<std::size_t>(i)] >> k & 1U) p.up_[static_cast<std::size_t>(i)] |= p.up_[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i)
        if (p.less(i, i)) throw std::invalid_argument("relations contain a cycle");
    return p;
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return from_relations(n, rel);
}

Poset Poset::antichain(int n) { return from_relations(n, {}); }

std::uint32_t Poset::down(int i) const {
    std::uint32_t out = 0;
    for (int j = 0; j < n_; ++j)
        if (less(j, i)) out |= 1U << j;
    return out;
}

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (less(i, j)) out.emplace_back(i, j);
    return out;
}

Poset Poset::relabel(const Permutation& label) const {
    if (label.size() != n_) throw std::invalid_argument("relabeling has the wrong size");
    Poset p;
    p.n_ = n_;
    p.up_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (less(i, j)) p.up_[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] |= 1U << label[static_cast<std::size_t>(j)];
    return p;
}

Poset Poset::induced(const std::vector<int>& elements) const {
    Poset p;
    p.n_ = static_cast<int>(elements.size());
    p.up_.assign(elements.size(), 0);
    for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = 0; b < elements.size(); ++b)
            if (less(elements[a], elements[b])) p.up_[a] |= 1U << b;
    return p;
}

bool Poset::naturally_labeled() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (less(i, j)) return false;
    return true;
}

bool is_3plus1_free(const Poset& p) {
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.less(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!p.less(b, c)) continue;
                for (int d = 0; d < n; ++d)
                    if (d != a && d != b && d != c && !p.comparable(a, d) && !p.comparable(b, d) &&
                        !p.comparable(c, d))
                        return false;
            }
        }
    return true;
}

bool is_unit_interval_order(const Poset& p) {
    if (!is_3plus1_free(p)) return false;
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.less(a, b)) continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (c == a || c == b || d == a || d == b || !p.less(c, d)) continue;
                    if (!p.comparable(a, c) && !p.comparable(a, d) && !p.comparable(b, c) && !p.comparable(b, d))
                        return false;
                }
        }
    return true;
}

Graph incomparability_graph(const Poset& p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (!p.comparable(i, j)) edges.emplace_back(i, j);
    return Graph::from_edges(p.size(), edges);
}

std::vector<int> beta_statistic(const Poset& p) {
    std::vector<int> beta(static_cast<std::size_t>(p.size()));
    for (int y = 0; y < p.size(); ++y)
        beta[static_cast<std::size_t>(y)] = std::popcount(p.down(y)) - std::popcount(p.up(y));
    return beta;
}

bool default_tie_break(const Poset& p, int a, int b) {
    const int da = std::popcount(p.down(a));
    const int db = std::popcount(p.down(b));
    if (da != db) return da < db;
    return a < b;
}

namespace {

Permutation beta_labeling(const Poset& p, const std::vector<int>& beta, const TieBreak& tie) {
    std::vector<int> order(static_cast<std::size_t>(p.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (beta[static_cast<std::size_t>(a)] != beta[static_cast<std::size_t>(b)])
            return beta[static_cast<std::size_t>(a)] < beta[static_cast<std::size_t>(b)];
        return tie(p, a, b);
    });
    std::vector<int> label(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) label[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    return Permutation(std::move(label));
}

Permutation read_permutation(const Poset& q) {
    const int n = q.size();
    std::vector<int> w;
    std::uint32_t used = 0;
    for (int j = 0; j < n; ++j) {
        int best = -1;
        for (int i = n - 1; i >= 0 && best < 0; --i)
            if (!(used >> i & 1U) && !q.less(j, i)) best = i;
        if (best < 0) throw std::logic_error("no admissible value while reading w(P)");
        used |= 1U << best;
        w.push_back(best);
    }
    return Permutation(std::move(w));
}

}  // namespace

Permutation uio_permutation(const Poset& p, const TieBreak& tie) {
    if (!is_unit_interval_order(p)) throw std::invalid_argument("poset is not a unit interval order");
    return read_permutation(p.relabel(beta_labeling(p, beta_statistic(p), tie)));
}

UioLabeling algorithm_P_to_C(const Poset& p, const TieBreak& tie, int ideal_cap) {
    if (!is_unit_interval_order(p)) throw std::invalid_argument("poset is not a unit interval order");
    if (p.size() > ideal_cap) throw ResourceLimitError("Bruhat ideal enumeration exceeds the size cap");
    UioLabeling out;
    out.beta = beta_statistic(p);
    out.labeling = beta_labeling(p, out.beta, tie);
    out.labeled = p.relabel(out.labeling);
    out.w = read_permutation(out.labeled);
    for (auto& v : all_permutations(p.size()))
        if (bruhat_leq(v, out.w)) out.ideal.push_back(std::move(v));
    return out;
}

ExactMatrix antiadjacency(const Poset& labeled) {
    const auto beta = beta_statistic(labeled);
    if (!std::is_sorted(beta.begin(), beta.end()))
        throw std::invalid_argument("labeling is not weakly increasing in beta");
    const int n = labeled.size();
    ExactMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = labeled.less(i, j) ? 0 : 1;
    return a;
}

std::vector<Poset> enumerate_uios(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    // Staircase form: m_0 <= m_1 <= ... with i < m_i <= n, and i < j iff j >= m_i.
    std::vector<Poset> out;
    std::vector<int> m(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i == n) {
            std::vector<std::pair<int, int>> rel;
            for (int a = 0; a < n; ++a)
                for (int b = m[static_cast<std::size_t>(a)]; b < n; ++b) rel.emplace_back(a, b);
            Poset p = Poset::from_relations(n, rel);
            out.push_back(p.relabel(beta_labeling(p, beta_statistic(p), default_tie_break)));
            return;
        }
        for (int v = std::max(lo, i + 1); v <= n; ++v) {
            m[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, 1);
    return out;
}

Poset canonical_form(const Poset& p) {
    const int n = p.size();
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    Poset best;
    bool have = false;
    do {
        Poset q = p.relabel(Permutation(label));
        if (!q.naturally_labeled()) continue;
        if (!have || q < best) {
            best = std::move(q);
            have = true;
        }
    } while (std::next_permutation(label.begin(), label.end()));
    return best;
}

std::vector<Poset> enumerate_posets(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 6) throw ResourceLimitError("poset enumeration is limited to n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<Poset> classes;
    const std::uint32_t total = 1U << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<std::uint32_t> up(static_cast<std::size_t>(n), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1U) up[static_cast<std::size_t>(pairs[k].first)] |= 1U << pairs[k].second;
        bool closed = true;
        for (int i = 0; i < n && closed; ++i)
            for (int j = 0; j < n && closed; ++j)
                if ((up[static_cast<std::size_t>(i)] >> j & 1U) && (up[static_cast<std::size_t>(j)] & ~up[static_cast<std::size_t>(i)]))
                    closed = false;
        if (!closed) continue;
        std::vector<std::pair<int, int>> rel;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1U) rel.push_back(pairs[k]);
        classes.insert(canonical_form(Poset::from_relations(n, rel)));
    }
    return {classes.begin(), classes.end()};
}

Poset random_poset(int n, Rng& rng, int num, int den) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(num, den)) rel.emplace_back(i, j);
    return Poset::from_relations(n, rel);
}

}  // namespace immkit

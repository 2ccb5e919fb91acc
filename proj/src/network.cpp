#include "immkit/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "immkit/chromatic.hpp"
#include "immkit/errors.hpp"
#include "immkit/rng.hpp"

namespace immkit {
namespace {

using VertexSet = std::vector<std::uint64_t>;

VertexSet vertex_set(const PlanarNetwork& f, const std::vector<int>& path, int source) {
    VertexSet s(static_cast<std::size_t>(f.vertex_count() + 63) / 64, 0);
    for (int v : path_vertices(f, path, source)) s[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    return s;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return false;
    return true;
}

// All paths from `from` to `to`, as edge index lists, in DFS order.
std::vector<std::vector<int>> all_paths(const PlanarNetwork& f, int from, int to, std::size_t cap) {
    std::vector<char> reaches(static_cast<std::size_t>(f.vertex_count()), 0);
    reaches[static_cast<std::size_t>(to)] = 1;
    const auto& topo = f.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (int e : f.out_edges(*it))
            if (reaches[static_cast<std::size_t>(f.edges()[static_cast<std::size_t>(e)].to)])
                reaches[static_cast<std::size_t>(*it)] = 1;

    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == to) {
            if (out.size() >= cap) throw ResourceLimitError("path enumeration exceeds the cap");
            out.push_back(current);
            return;
        }
        for (int e : f.out_edges(v)) {
            const int w = f.edges()[static_cast<std::size_t>(e)].to;
            if (!reaches[static_cast<std::size_t>(w)]) continue;
            current.push_back(e);
            self(self, w);
            current.pop_back();
        }
    };
    if (reaches[static_cast<std::size_t>(from)]) dfs(dfs, from);
    return out;
}

std::vector<std::vector<std::vector<int>>> paths_per_index(const PlanarNetwork& f, std::size_t cap) {
    std::vector<std::vector<std::vector<int>>> per;
    for (int i = 0; i < f.order(); ++i)
        per.push_back(all_paths(f, f.sources()[static_cast<std::size_t>(i)], f.sinks()[static_cast<std::size_t>(i)], cap));
    return per;
}

template <class Visit>
void for_each_family(const PlanarNetwork& f, std::size_t cap, Visit visit) {
    auto per = paths_per_index(f, cap);
    std::size_t total = 1;
    for (const auto& list : per) {
        if (list.empty()) return;
        if (total > cap / list.size()) throw ResourceLimitError("path family enumeration exceeds the cap");
        total *= list.size();
    }
    PathFamily family;
    family.paths.resize(per.size());
    std::vector<std::size_t> idx(per.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < per.size(); ++i) family.paths[i] = per[i][idx[i]];
        visit(family);
        std::size_t pos = per.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < per[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (per.empty()) return;
    }
}

}  // namespace

std::string_view chip_name(ChipKind kind) {
    switch (kind) {
        case ChipKind::lower: return "lower";
        case ChipKind::upper: return "upper";
        case ChipKind::scale: return "scale";
    }
    return "?";
}

ChipKind parse_chip(std::string_view name) {
    if (name == "lower") return ChipKind::lower;
    if (name == "upper") return ChipKind::upper;
    if (name == "scale") return ChipKind::scale;
    throw std::invalid_argument("unknown chip kind: " + std::string(name));
}

PlanarNetwork::PlanarNetwork(int vertex_count, std::vector<NetworkEdge> edges, std::vector<int> sources,
                             std::vector<int> sinks)
    : vertex_count_(vertex_count), edges_(std::move(edges)), sources_(std::move(sources)), sinks_(std::move(sinks)) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (sources_.size() != sinks_.size()) throw std::invalid_argument("need as many sinks as sources");
    const auto nv = static_cast<std::size_t>(vertex_count);
    out_.assign(nv, {});
    std::vector<int> indegree(nv, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& edge = edges_[e];
        if (edge.from < 0 || edge.to < 0 || edge.from >= vertex_count || edge.to >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (edge.weight < 0) throw std::invalid_argument("edge weights must be nonnegative");
        out_[static_cast<std::size_t>(edge.from)].push_back(static_cast<int>(e));
        ++indegree[static_cast<std::size_t>(edge.to)];
    }
    std::vector<char> seen(nv, 0);
    for (int v : sources_) {
        if (v < 0 || v >= vertex_count || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("bad source vertex");
        seen[static_cast<std::size_t>(v)] = 1;
        if (indegree[static_cast<std::size_t>(v)] != 0) throw std::invalid_argument("sources must have no incoming edges");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int v : sinks_) {
        if (v < 0 || v >= vertex_count || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("bad sink vertex");
        seen[static_cast<std::size_t>(v)] = 1;
        if (!out_[static_cast<std::size_t>(v)].empty()) throw std::invalid_argument("sinks must have no outgoing edges");
    }
    std::vector<int> ready;
    for (int v = vertex_count - 1; v >= 0; --v)
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        topo_.push_back(v);
        for (int e : out_[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].to)] == 0)
                ready.push_back(edges_[static_cast<std::size_t>(e)].to);
    }
    if (topo_.size() != nv) throw std::invalid_argument("network contains a directed cycle");
}

PlanarNetwork PlanarNetwork::wires(int n) { return from_chips(n, {}); }

PlanarNetwork PlanarNetwork::from_chips(int n, std::vector<Chip> chips) {
    if (n < 1) throw std::invalid_argument("network order must be positive");
    std::vector<NetworkEdge> edges;
    std::vector<int> sources(static_cast<std::size_t>(n));
    std::vector<int> current(static_cast<std::size_t>(n));
    int next = 0;
    for (int r = 0; r < n; ++r) sources[static_cast<std::size_t>(r)] = current[static_cast<std::size_t>(r)] = next++;
    auto advance = [&](int r) {
        const int v = next++;
        edges.push_back({current[static_cast<std::size_t>(r)], v, Rational(1)});
        return v;
    };
    for (const auto& chip : chips) {
        if (chip.weight < 0) throw std::invalid_argument("chip weights must be nonnegative");
        const int r = chip.row;
        if (chip.kind == ChipKind::scale) {
            if (r < 0 || r >= n) throw std::invalid_argument("chip row out of range");
            const int v = next++;
            edges.push_back({current[static_cast<std::size_t>(r)], v, chip.weight});
            current[static_cast<std::size_t>(r)] = v;
            continue;
        }
        if (r < 0 || r + 1 >= n) throw std::invalid_argument("chip row out of range");
        const int from_wire = chip.kind == ChipKind::lower ? r + 1 : r;
        const int to_wire = chip.kind == ChipKind::lower ? r : r + 1;
        const int start = current[static_cast<std::size_t>(from_wire)];
        const int a = advance(r);
        const int b = advance(r + 1);
        current[static_cast<std::size_t>(r)] = a;
        current[static_cast<std::size_t>(r + 1)] = b;
        if (chip.weight != 0) edges.push_back({start, to_wire == r ? a : b, chip.weight});
    }
    std::vector<int> sinks(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) sinks[static_cast<std::size_t>(r)] = advance(r);
    PlanarNetwork f(next, std::move(edges), std::move(sources), std::move(sinks));
    f.chips_ = std::move(chips);
    return f;
}

ExactMatrix path_matrix(const PlanarNetwork& f) {
    const int n = f.order();
    ExactMatrix a(n);
    std::vector<Rational> total(static_cast<std::size_t>(f.vertex_count()));
    for (int i = 0; i < n; ++i) {
        std::fill(total.begin(), total.end(), Rational(0));
        total[static_cast<std::size_t>(f.sources()[static_cast<std::size_t>(i)])] = 1;
        for (int v : f.topological_order()) {
            if (total[static_cast<std::size_t>(v)] == 0) continue;
            for (int e : f.out_edges(v)) {
                const auto& edge = f.edges()[static_cast<std::size_t>(e)];
                total[static_cast<std::size_t>(edge.to)] += total[static_cast<std::size_t>(v)] * edge.weight;
            }
        }
        for (int j = 0; j < n; ++j) a(i, j) = total[static_cast<std::size_t>(f.sinks()[static_cast<std::size_t>(j)])];
    }
    return a;
}

std::vector<int> path_vertices(const PlanarNetwork& f, const std::vector<int>& path, int source) {
    std::vector<int> out{source};
    for (int e : path) out.push_back(f.edges()[static_cast<std::size_t>(e)].to);
    return out;
}

Rational family_weight(const PlanarNetwork& f, const PathFamily& family) {
    Rational w = 1;
    for (const auto& path : family.paths)
        for (int e : path) w *= f.edges()[static_cast<std::size_t>(e)].weight;
    return w;
}

Skeleton skeleton_of(const PathFamily& family) {
    Skeleton k;
    for (const auto& path : family.paths) k.insert(k.end(), path.begin(), path.end());
    std::sort(k.begin(), k.end());
    return k;
}

Rational skeleton_weight(const PlanarNetwork& f, const Skeleton& k) {
    Rational w = 1;
    for (int e : k) w *= f.edges()[static_cast<std::size_t>(e)].weight;
    return w;
}

Rational lindstrom_det(const PlanarNetwork& f, std::size_t cap) {
    auto per = paths_per_index(f, cap);
    std::vector<std::vector<VertexSet>> sets(per.size());
    std::vector<std::vector<Rational>> weights(per.size());
    for (std::size_t i = 0; i < per.size(); ++i)
        for (const auto& path : per[i]) {
            sets[i].push_back(vertex_set(f, path, f.sources()[i]));
            Rational w = 1;
            for (int e : path) w *= f.edges()[static_cast<std::size_t>(e)].weight;
            weights[i].push_back(w);
        }
    Rational total = 0;
    std::vector<const VertexSet*> chosen;
    auto rec = [&](auto&& self, std::size_t i, const Rational& w) -> void {
        if (i == per.size()) {
            total += w;
            return;
        }
        for (std::size_t p = 0; p < per[i].size(); ++p) {
            bool ok = true;
            for (const auto* s : chosen) ok = ok && disjoint(*s, sets[i][p]);
            if (!ok) continue;
            chosen.push_back(&sets[i][p]);
            self(self, i + 1, w * weights[i][p]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, Rational(1));
    return total;
}

std::map<Skeleton, std::vector<PathFamily>> families_by_skeleton(const PlanarNetwork& f, std::size_t cap) {
    std::map<Skeleton, std::vector<PathFamily>> out;
    for_each_family(f, cap, [&](const PathFamily& family) { out[skeleton_of(family)].push_back(family); });
    return out;
}

FamilyPoset family_poset(const PlanarNetwork& f, const PathFamily& family) {
    const int n = static_cast<int>(family.paths.size());
    std::vector<VertexSet> sets;
    for (int i = 0; i < n; ++i)
        sets.push_back(vertex_set(f, family.paths[static_cast<std::size_t>(i)], f.sources()[static_cast<std::size_t>(i)]));
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (disjoint(sets[static_cast<std::size_t>(i)], sets[static_cast<std::size_t>(j)])) rel.emplace_back(i, j);
    FamilyPoset out;
    out.poset = Poset::from_relations(n, rel);
    out.closure_added = out.poset.relations().size() != rel.size();
    return out;
}

std::map<Poset, Rational> family_poset_weights(const PlanarNetwork& f, std::size_t cap) {
    std::map<Poset, Rational> weight_by_poset;
    for_each_family(f, cap, [&](const PathFamily& family) {
        const Rational w = family_weight(f, family);
        if (w != 0) weight_by_poset[family_poset(f, family).poset] += w;
    });
    return weight_by_poset;
}

Rational weighted_family_sum(const PlanarNetwork& f, const std::function<Rational(const Poset&)>& value,
                             std::size_t cap) {
    Rational total = 0;
    for (const auto& [poset, w] : family_poset_weights(f, cap)) total += w * value(poset);
    return total;
}

Rational immanant_via_network(const TraceVector& theta, const PlanarNetwork& f, std::size_t cap) {
    if (theta.degree() != f.order()) throw std::invalid_argument("trace degree must equal the network order");
    const SymmetricFunction a = convert(frobenius(theta), Basis::elementary);
    auto value = [&a](const Poset& p) {
        const SymmetricFunction x = chromatic_symmetric_function(incomparability_graph(p));
        Rational total = 0;
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) total += a.coeffs()[i] * x.coeffs()[i];
        return total;
    };
    return weighted_family_sum(f, value, cap);
}

PlanarNetwork random_tnn_network(int n, int depth, Rng& rng) {
    if (n < 1 || depth < 0) throw std::invalid_argument("need n >= 1 and depth >= 0");
    std::vector<Chip> chips;
    for (int c = 0; c < depth; ++c) {
        Chip chip;
        const auto kind = n == 1 ? 2 : rng.uniform(0, 2);
        chip.kind = kind == 0 ? ChipKind::lower : kind == 1 ? ChipKind::upper : ChipKind::scale;
        chip.row = static_cast<int>(chip.kind == ChipKind::scale ? rng.uniform(0, n - 1) : rng.uniform(0, n - 2));
        const auto num = rng.uniform(0, 9);
        const auto den = rng.uniform(1, 4);
        chip.weight = make_rational(static_cast<long>(num), static_cast<long>(den));
        chips.push_back(chip);
    }
    return PlanarNetwork::from_chips(n, std::move(chips));
}

PlanarNetwork random_tnn_network(int n, int depth, std::uint64_t seed) {
    Rng rng = Rng::substream(seed, 0);
    return random_tnn_network(n, depth, rng);
}

namespace {

// Neville elimination of the entries below the diagonal, column by column,
// each row against the row directly above it. Returns the multipliers as
// lower chips in the order they were applied; m leaves upper triangular.
std::vector<Chip> eliminate_below(std::vector<std::vector<Rational>>& m, bool transposed) {
    const int n = static_cast<int>(m.size());
    std::vector<Chip> chips;
    for (int j = 0; j + 1 < n; ++j)
        for (int i = n - 1; i > j; --i) {
            auto& below = m[static_cast<std::size_t>(i)];
            const auto& above = m[static_cast<std::size_t>(i - 1)];
            if (below[static_cast<std::size_t>(j)] == 0) continue;
            const int pr = transposed ? j : i - 1;
            const int pc = transposed ? i - 1 : j;
            if (above[static_cast<std::size_t>(j)] == 0)
                throw NotFactorableError("zero pivot at (" + std::to_string(pr + 1) + "," + std::to_string(pc + 1) + ")", pr, pc);
            Rational mult = below[static_cast<std::size_t>(j)] / above[static_cast<std::size_t>(j)];
            if (mult < 0)
                throw NotFactorableError("negative multiplier at pivot (" + std::to_string(pr + 1) + "," +
                                             std::to_string(pc + 1) + ")",
                                         pr, pc);
            for (int c = 0; c < n; ++c)
                below[static_cast<std::size_t>(c)] -= mult * above[static_cast<std::size_t>(c)];
            chips.push_back({ChipKind::lower, i - 1, mult});
        }
    return chips;
}

}  // namespace

PlanarNetwork factor_to_network(const ExactMatrix& a) {
    const int n = a.size();
    if (n < 1) throw std::invalid_argument("empty matrix");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    std::vector<Chip> chips = eliminate_below(m, false);

    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<Chip> upper = eliminate_below(t, true);

    for (int r = 0; r < n; ++r) {
        const Rational& d = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        if (d <= 0) throw NotFactorableError("non-positive diagonal pivot at (" + std::to_string(r + 1) + "," +
                                                 std::to_string(r + 1) + ")",
                                             r, r);
        if (d != 1) chips.push_back({ChipKind::scale, r, d});
    }
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) chips.push_back({ChipKind::upper, it->row, it->weight});
    return PlanarNetwork::from_chips(n, std::move(chips));
}

}  // namespace immkit

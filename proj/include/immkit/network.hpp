#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include "immkit/characters.hpp"
#include "immkit/matrix.hpp"
#include "immkit/poset.hpp"

namespace immkit {

struct NetworkEdge {
    int from = 0;
    int to = 0;
    Rational weight;
};

/// lower: I + w e_{r+1,r} (an edge from wire r+1 to wire r);
/// upper: I + w e_{r,r+1}; scale: w on the diagonal at wire r.
enum class ChipKind { lower, upper, scale };
std::string_view chip_name(ChipKind kind);
ChipKind parse_chip(std::string_view name);

struct Chip {
    ChipKind kind = ChipKind::scale;
    int row = 0;  // 0-based wire
    Rational weight;
    friend bool operator==(const Chip&, const Chip&) = default;
};

/// Acyclic network with nonnegative edge weights and n sources and sinks.
class PlanarNetwork {
public:
    PlanarNetwork() = default;
    /// Throws std::invalid_argument on cycles, negative weights, bad vertex
    /// ids, sources with incoming edges or sinks with outgoing edges.
    PlanarNetwork(int vertex_count, std::vector<NetworkEdge> edges, std::vector<int> sources, std::vector<int> sinks);

    /// n parallel wires (path matrix I_n).
    static PlanarNetwork wires(int n);
    /// Left-to-right concatenation of chips; the path matrix is the product
    /// of the chip matrices. Crossing chips of weight zero add no edge.
    static PlanarNetwork from_chips(int n, std::vector<Chip> chips);

    int order() const noexcept { return static_cast<int>(sources_.size()); }
    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<NetworkEdge>& edges() const noexcept { return edges_; }
    const std::vector<int>& sources() const noexcept { return sources_; }
    const std::vector<int>& sinks() const noexcept { return sinks_; }
    const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& topological_order() const noexcept { return topo_; }
    /// Chips the network was built from (empty for general networks).
    const std::vector<Chip>& chips() const noexcept { return chips_; }

private:
    int vertex_count_ = 0;
    std::vector<NetworkEdge> edges_;
    std::vector<int> sources_;
    std::vector<int> sinks_;
    std::vector<std::vector<int>> out_;
    std::vector<int> topo_;
    std::vector<Chip> chips_;
};

/// a_{ij} = total weight of paths from source i to sink j.
ExactMatrix path_matrix(const PlanarNetwork& f);

inline constexpr std::size_t kDefaultFamilyCap = 200000;

/// Sum of weights of vertex-disjoint families (source i to sink i).
Rational lindstrom_det(const PlanarNetwork& f, std::size_t cap = kDefaultFamilyCap);

/// paths[i] runs from source i to sink i, as a list of edge indices.
struct PathFamily {
    std::vector<std::vector<int>> paths;
    friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

std::vector<int> path_vertices(const PlanarNetwork& f, const std::vector<int>& path, int source);
Rational family_weight(const PlanarNetwork& f, const PathFamily& family);

/// Sorted edge indices, repeated according to multiplicity.
using Skeleton = std::vector<int>;
Skeleton skeleton_of(const PathFamily& family);
Rational skeleton_weight(const PlanarNetwork& f, const Skeleton& k);

/// Every family of paths (source i to sink i), grouped by skeleton in key
/// order; families within a skeleton appear in enumeration order. Throws
/// ResourceLimitError when more than `cap` families exist.
std::map<Skeleton, std::vector<PathFamily>> families_by_skeleton(const PlanarNetwork& f,
                                                                 std::size_t cap = kDefaultFamilyCap);

struct FamilyPoset {
    Poset poset;
    /// True when the disjointness relation was not transitive on its own.
    bool closure_added = false;
};

/// pi_i < pi_j iff i < j and the two paths share no vertex.
FamilyPoset family_poset(const PlanarNetwork& f, const PathFamily& family);

/// Total weight of the families whose poset is P, for every P that occurs
/// with nonzero weight.
std::map<Poset, Rational> family_poset_weights(const PlanarNetwork& f, std::size_t cap = kDefaultFamilyCap);

/// sum over families pi of wgt(pi) * value(P(pi)); posets are shared between
/// families, and value is evaluated once per distinct poset.
Rational weighted_family_sum(const PlanarNetwork& f, const std::function<Rational(const Poset&)>& value,
                             std::size_t cap = kDefaultFamilyCap);

/// sum_K wgt(K) sum_{pi in K} theta(inc(P(pi))).
Rational immanant_via_network(const TraceVector& theta, const PlanarNetwork& f, std::size_t cap = kDefaultFamilyCap);

class Rng;
/// `depth` random chips: kind and row uniform, weight k/d with k in 0..9 and
/// d in 1..4. Only scale chips when n = 1.
PlanarNetwork random_tnn_network(int n, int depth, std::uint64_t seed);
PlanarNetwork random_tnn_network(int n, int depth, Rng& rng);

/// Neville elimination without row exchanges: A = (lower chips)(scale
/// chips)(upper chips). Throws NotFactorableError naming the pivot on a
/// negative multiplier, an unsupported zero pivot or a non-positive
/// diagonal entry.
PlanarNetwork factor_to_network(const ExactMatrix& a);

}  // namespace immkit

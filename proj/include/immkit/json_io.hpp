#pragma once

#include <string_view>

#include <json.hpp>

#include "immkit/characters.hpp"
#include "immkit/graph.hpp"
#include "immkit/matrix.hpp"
#include "immkit/network.hpp"
#include "immkit/partition.hpp"
#include "immkit/poset.hpp"

namespace immkit {

using Json = nlohmann::ordered_json;

// All parse functions throw std::invalid_argument on malformed input.
// Element, vertex and row indices in JSON are 1-based.

Json to_json(const Partition& lambda);  // [4,1,1]
Partition partition_from_json(const Json& j);

Json to_json(const Rational& q);  // "p/q" string
Rational rational_from_json(const Json& j);  // string or integer

/// {basis: "class_function", n, coeffs: [[partition, value], ...]}
Json to_json(const TraceVector& theta);
TraceVector trace_from_json(const Json& j);

/// {basis: "m"|"e"|"h"|"p"|"s"|"f", n, coeffs: [[partition, value], ...]}
Json to_json(const SymmetricFunction& sf);
SymmetricFunction symmetric_function_from_json(const Json& j);

Json to_json(const ExactMatrix& a);  // array of rows of rational strings
ExactMatrix matrix_from_json(const Json& j);

/// {n, relations: [[i, j], ...]} meaning i < j.
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

/// {n, edges: [[i, j], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Chip networks: {n, chips: [{kind, row, weight}, ...]}. Others:
/// {n, vertices, edges: [[u, v, weight], ...], sources, sinks}.
Json to_json(const PlanarNetwork& f);
PlanarNetwork network_from_json(const Json& j);

/// "chi:4,1,1", "eps:2,1", "phi:3" and so on.
TraceVector parse_trace_spec(std::string_view spec);

}  // namespace immkit

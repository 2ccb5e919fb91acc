#pragma once

#include <vector>

#include "immkit/characters.hpp"
#include "immkit/graph.hpp"
#include "immkit/partition.hpp"

namespace immkit {

/// Proper colorings using exactly colours 1..l(lambda), colour i on lambda_i vertices.
Integer colorings_of_type(const Graph& g, const Partition& lambda);

/// X_G in the monomial basis: coefficient of m_lambda is colorings_of_type(G, lambda).
SymmetricFunction chromatic_symmetric_function(const Graph& g);

/// theta(G): expand theta = sum_lambda a_lambda eps^lambda and return
/// sum_lambda a_lambda c(G, lambda).
Rational trace_of_graph(const TraceVector& theta, const Graph& g);

/// Same, reusing a precomputed X_G (monomial basis).
Rational trace_of_graph(const TraceVector& theta, const SymmetricFunction& chromatic);

/// counts[l-1] = number of acyclic orientations with exactly l sources.
std::vector<Integer> acyclic_orientation_source_counts(const Graph& g);

/// Throws std::invalid_argument unless 1 <= l <= n.
Integer acyclic_orientations_with_sources(const Graph& g, int l);

Integer acyclic_orientation_count(const Graph& g);

/// Number of sequences (O_1, ..., O_r) of acyclic orientations of induced
/// subgraphs on pairwise disjoint vertex sets of sizes lambda_1..lambda_r.
Integer induced_acyclic_sequences(const Graph& g, const Partition& lambda);

}  // namespace immkit

#pragma once

#include "turan/graph.hpp"

namespace turan {

int max_degree(const Graph& g);

/// Maximum matching size, exact for any order (blossom contraction).
int matching_number(const Graph& g);

// The exact solvers below are exponential branch-and-bound searches and are
// limited to 64 vertices, far beyond any size they are invoked on here.

/// Minimum vertex cover, computed by direct search (not via n - alpha, so it
/// can be cross-checked against max_independent_set with Gallai's identity).
int covering_number(const Graph& g);

int max_independent_set(const Graph& g);

int chromatic_number(const Graph& g);

/// Minimum size of an independent set meeting every edge. Defined for
/// bipartite graphs only; throws std::domain_error otherwise.
int independent_covering_number(const Graph& g);

}  // namespace turan

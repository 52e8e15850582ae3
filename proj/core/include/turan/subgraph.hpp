#pragma once

#include <cstdint>
#include <vector>

#include "turan/family.hpp"
#include "turan/graph.hpp"

namespace turan {

struct EmbedOptions {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  // Collapse interchangeable host vertices (equal neighbourhoods) so that
  // only one representative per class is branched on. Sound for ordinary
  // subgraph embedding and essential on join-with-Turan hosts.
  bool twin_reduction = true;
  // If >= 0, only embeddings whose image contains this host vertex count.
  int anchor_host_vertex = -1;
};

enum class EmbedOutcome { found, absent, budget_exhausted };

struct EmbedResult {
  EmbedOutcome outcome = EmbedOutcome::absent;
  std::vector<int> witness;  // pattern vertex -> host vertex (when found)
  std::uint64_t nodes = 0;   // assignments attempted
};

/// Backtracking search for an injective, adjacency-preserving map of
/// pattern into host (ordinary subgraph, not induced). Pattern vertices are
/// visited in a most-constrained static order; candidate sets are
/// neighbourhood-bitset intersections.
EmbedResult find_embedding(const Graph& host, const Graph& pattern,
                           const EmbedOptions& options = {});

/// Unbudgeted containment test.
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// True iff no family member embeds into host (unbudgeted).
bool is_family_free(const Graph& host, const GraphFamily& family);

/// Re-checks a witness with plain adjacency lookups, independent of the
/// search internals.
bool verify_embedding(const Graph& host, const Graph& pattern,
                      const std::vector<int>& witness);

}  // namespace turan

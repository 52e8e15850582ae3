#pragma once

#include <cstdint>
#include <optional>

#include "turan/family.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Exhaustive extremal search over isomorphism classes. Graphs are grown one
/// vertex at a time with all admissible neighbourhoods; each level is
/// deduplicated by canonical form, and every constraint is monotone under
/// edge addition, so violating graphs are pruned hereditarily.
struct SearchJob {
  int n = 0;
  GraphFamily forbidden;            // every member must have >= 1 edge
  std::optional<int> max_matching;  // matching number cap
  std::optional<int> max_degree;    // degree cap
  bool collect_witnesses = true;
  std::uint64_t node_budget = 0;  // children examined; 0 = unlimited
  int threads = 1;
  /// The exhaustive engine is meant for n <= 10 (isomorphism classes grow
  /// to ~12 million there); pass true to acknowledge the cost beyond that.
  bool override_guardrail = false;
};

struct SearchResult {
  long long optimum = 0;
  GraphFamily witnesses;  // all attainers, up to isomorphism (if requested)
  bool exhaustive = true;
  std::uint64_t nodes_explored = 0;
};

/// Maximum edge count of an n-vertex graph avoiding every forbidden member
/// and respecting the parameter caps; exact when exhaustive is true.
SearchResult exact_ex(const SearchJob& job);

/// Maximum edges with matching number <= nu and max degree <= delta.
SearchResult f_oracle(int n, int nu, int delta, int threads = 1);

/// The optimum attainers of a job, up to isomorphism.
GraphFamily extremal_witnesses(const SearchJob& job);

}  // namespace turan

#pragma once

#include <cstdint>
#include <vector>

#include "turan/family.hpp"
#include "turan/graph.hpp"

namespace turan {

struct DecompositionOptions {
  int r = 2;           // target graph has chromatic number r + 1
  int t_max = 0;       // padding sizes to scan; 0 means |target|
  int size_cap = 8;    // largest candidate order considered
  std::uint64_t embed_budget = 0;  // per embedding test; 0 = unlimited
};

struct DecompositionResult {
  GraphFamily members;
  /// False when some embedding test ran out of budget, in which case the
  /// family may be incomplete; the affected candidates are listed.
  bool complete = true;
  std::vector<Graph> indeterminate_candidates;
  /// Some member has exactly size_cap vertices, so larger minimal members
  /// past the cap cannot be ruled out.
  bool members_at_cap = false;
  std::uint64_t embed_nodes = 0;
};

/// Brute-force decomposition family: all minimal graphs M, up to
/// isomorphism and with at most size_cap vertices, such that target embeds
/// into (M + t isolated vertices) joined with the balanced complete
/// (r-1)-partite graph on (r-1)t vertices, for some t <= t_max. Minimal
/// means no single edge deletion (or isolated-vertex deletion) preserves
/// the property. Requires chromatic_number(target) == r + 1.
DecompositionResult decomposition_family_bruteforce(
    const Graph& target, const DecompositionOptions& options);

}  // namespace turan

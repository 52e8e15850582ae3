#pragma once

#include <compare>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Opaque byte string identifying an isomorphism class: two graphs have
/// equal forms iff they are isomorphic. Starts with the vertex count, so
/// lexicographic order groups families by order first.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalResult {
  CanonicalForm form;
  std::vector<int> labeling;  // old vertex -> canonical label
  // Automorphisms discovered during the search (old -> old). These generate
  // a subgroup of Aut(G), not necessarily all of it.
  std::vector<std::vector<int>> generators;
};

/// Canonical labeling by equitable-partition refinement plus backtracking
/// over the first non-singleton cell; the minimum leaf certificate is the
/// canonical form. Discovered automorphisms prune symmetric branches.
CanonicalResult canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Orbit id per vertex under the generators found by canonical_labeling.
/// Orbits may be finer than the true automorphism orbits.
std::vector<int> vertex_orbits(const Graph& g);

/// The canonical representative: g relabelled so that equal forms give
/// byte-identical graphs.
Graph canonical_representative(const Graph& g);

}  // namespace turan

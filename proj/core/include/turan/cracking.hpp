#pragma once

#include <map>
#include <utility>
#include <vector>

#include "turan/family.hpp"
#include "turan/graph.hpp"

namespace turan {

enum class CrackType { type_one, type_two };

/// An independent set U of the graph being cracked plus a type label for
/// every edge with an endpoint in U. Type one reattaches the split edge to
/// the old neighbour; type two redirects it to a fresh pendant vertex.
struct CrackAssignment {
  std::vector<int> independent_set;
  std::map<std::pair<int, int>, CrackType> edge_types;  // keyed with u < v
};

/// Cracks every vertex u in U: u is replaced by deg(u) fresh vertices, one
/// per incident edge, and each edge is redirected according to its type.
/// Edges not touching U are kept. The result keeps any vertices isolated by
/// type-two redirections; family constructors strip those.
Graph crack(const Graph& f, const CrackAssignment& assignment);

/// All graphs obtainable by cracking the vertices of U, over every type
/// assignment, as isomorphism classes (isolated vertices stripped).
GraphFamily crack_family(const Graph& f, const std::vector<int>& u);

/// Union of crack_family(f, U) over every independent set U (including the
/// empty set, so f itself is a member). Independent sets are enumerated up
/// to the automorphisms discovered by canonical labeling; the result equals
/// full enumeration.
GraphFamily cracking_family(const Graph& f);

/// The four named crackings of K_1 joined with base used to pin the minimum
/// independent covering number; which must be 1..4. Every component of base
/// must be a non-trivial tree or an even cycle.
Graph fixture_j(const Graph& base, int which);

/// Minimum independent_covering_number over the bipartite members.
/// Throws std::domain_error if no member is bipartite.
int q_of_family(const GraphFamily& family);

}  // namespace turan

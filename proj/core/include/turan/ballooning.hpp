#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// A skeleton graph together with one odd cycle length (>= 3) per edge.
/// Lengths of exactly 3 are constructible but fall outside the regime the
/// closed-form predictors accept (they require every length >= 5).
struct BalloonSpec {
  Graph skeleton;
  std::map<std::pair<int, int>, int> lengths;  // keyed with u < v

  static BalloonSpec uniform(const Graph& skeleton, int length);

  /// True when every substituted cycle has length at least five.
  bool lengths_at_least_five() const;

  /// Throws std::invalid_argument unless every skeleton edge has exactly one
  /// odd length >= 3 assigned.
  void validate() const;
};

struct BalloonResult {
  Graph graph;
  /// Per skeleton edge (u,v): the vertices of its substituted cycle in cycle
  /// order, starting u, ending v (so uv closes the cycle).
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> cycles;
};

/// Replaces every skeleton edge uv by a cycle of the assigned odd length
/// through u and v, with uv kept as a cycle edge and all other cycle
/// vertices fresh and disjoint across edges. Fresh vertices are appended
/// after the skeleton block in sorted edge order, so output is reproducible.
BalloonResult odd_balloon(const BalloonSpec& spec);

/// (vertex count, edge count) of odd_balloon(spec) without building it.
std::pair<long long, long long> balloon_sizes(const BalloonSpec& spec);

std::string format_balloon_spec_text(const BalloonSpec& spec);
std::string format_balloon_spec_json(const BalloonSpec& spec);

/// Accepts either the text form "<graph6> ; edge u,v = len ; ..." or the
/// JSON form {"skeleton": "<graph6>", "lengths": [[u, v, len], ...]}.
BalloonSpec parse_balloon_spec(std::string_view input);

}  // namespace turan

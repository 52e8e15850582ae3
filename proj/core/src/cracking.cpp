#include "turan/cracking.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "turan/invariants.hpp"

namespace turan {

namespace {

std::pair<int, int> sorted_edge(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

void require_independent(const Graph& f, const std::vector<int>& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || u[i] >= f.order())
      throw std::invalid_argument("crack: vertex out of range");
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] == u[j])
        throw std::invalid_argument("crack: repeated vertex in U");
      if (f.adjacent(u[i], u[j]))
        throw std::invalid_argument("crack: U is not an independent set");
    }
  }
}

std::vector<std::pair<int, int>> incident_edges(const Graph& f,
                                                const std::vector<int>& u) {
  std::set<int> in_u(u.begin(), u.end());
  std::vector<std::pair<int, int>> out;
  for (auto e : f.edge_list())
    if (in_u.count(e.first) || in_u.count(e.second)) out.push_back(e);
  return out;
}

// Components of base must each be a non-trivial tree or an even cycle.
void require_tree_or_even_cycle_components(const Graph& base) {
  for (const auto& comp : connected_components(base)) {
    long long edges = 0;
    bool cycle_candidate = true;
    for (int v : comp) {
      int d = base.degree(v);
      edges += d;
      if (d != 2) cycle_candidate = false;
    }
    edges /= 2;
    long long n = static_cast<long long>(comp.size());
    bool tree = edges == n - 1 && n >= 2;
    bool even_cycle = cycle_candidate && edges == n && n >= 4 && n % 2 == 0;
    if (!tree && !even_cycle)
      throw std::invalid_argument(
          "base graph component is neither a non-trivial tree nor an even "
          "cycle");
  }
}

}  // namespace

Graph crack(const Graph& f, const CrackAssignment& assignment) {
  const auto& u_set = assignment.independent_set;
  require_independent(f, u_set);
  auto incident = incident_edges(f, u_set);
  {
    std::set<std::pair<int, int>> expected(incident.begin(), incident.end());
    std::set<std::pair<int, int>> given;
    for (const auto& [e, type] : assignment.edge_types) given.insert(e);
    if (expected != given)
      throw std::invalid_argument(
          "crack: edge type labels must cover exactly the edges incident to "
          "U");
  }

  std::set<int> in_u(u_set.begin(), u_set.end());
  int next = 0;
  std::vector<int> kept(f.order(), -1);
  for (int v = 0; v < f.order(); ++v)
    if (!in_u.count(v)) kept[v] = next++;

  // One fresh vertex per (cracked vertex, incident edge), in sorted order.
  std::map<std::pair<int, int>, int> piece;
  for (int u : std::set<int>(in_u)) {
    for (int v : f.neighbors(u)) piece[{u, v}] = next++;
  }
  std::map<std::pair<int, int>, int> pendant;
  for (const auto& [e, type] : assignment.edge_types)
    if (type == CrackType::type_two) pendant[e] = next++;

  Graph out(next);
  for (auto [x, y] : f.edge_list()) {
    bool xu = in_u.count(x), yu = in_u.count(y);
    if (!xu && !yu) {
      out.add_edge(kept[x], kept[y]);
      continue;
    }
    int cracked = xu ? x : y;
    int other = xu ? y : x;
    int p = piece.at({cracked, other});
    auto type = assignment.edge_types.at(sorted_edge(x, y));
    if (type == CrackType::type_one)
      out.add_edge(p, kept[other]);
    else
      out.add_edge(p, pendant.at(sorted_edge(x, y)));
  }
  return out;
}

GraphFamily crack_family(const Graph& f, const std::vector<int>& u) {
  require_independent(f, u);
  auto incident = incident_edges(f, u);
  if (incident.size() > 24)
    throw std::invalid_argument(
        "crack_family: too many incident edges to enumerate");
  GraphFamily family;
  for (std::uint64_t mask = 0; mask < (1ull << incident.size()); ++mask) {
    CrackAssignment a{u, {}};
    for (std::size_t i = 0; i < incident.size(); ++i)
      a.edge_types[incident[i]] =
          (mask >> i) & 1 ? CrackType::type_two : CrackType::type_one;
    family.insert(strip_isolated(crack(f, a)));
  }
  return family;
}

GraphFamily cracking_family(const Graph& f) {
  int n = f.order();
  if (n > 64)
    throw std::invalid_argument("cracking_family: graph too large");
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : f.edge_list()) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }

  auto generators = canonical_labeling(f).generators;
  auto orbit_minimum = [&](std::uint64_t mask) {
    std::uint64_t lo = mask;
    std::set<std::uint64_t> seen{mask};
    std::vector<std::uint64_t> frontier{mask};
    while (!frontier.empty()) {
      std::uint64_t m = frontier.back();
      frontier.pop_back();
      for (const auto& sigma : generators) {
        std::uint64_t img = 0;
        for (int v = 0; v < n; ++v)
          if ((m >> v) & 1) img |= 1ull << sigma[v];
        if (seen.insert(img).second) {
          frontier.push_back(img);
          lo = std::min(lo, img);
        }
      }
    }
    return lo;
  };

  GraphFamily family;
  // Enumerate independent sets; skip non-minimal representatives of their
  // orbit under the discovered automorphisms (results match full
  // enumeration since members land in the same isomorphism classes).
  std::vector<int> current;
  auto recurse = [&](auto&& self, int from, std::uint64_t mask) -> void {
    if (orbit_minimum(mask) == mask)
      family.merge(crack_family(f, current));
    for (int v = from; v < n; ++v) {
      if (adj[v] & mask) continue;
      current.push_back(v);
      self(self, v + 1, mask | (1ull << v));
      current.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return family;
}

Graph fixture_j(const Graph& base, int which) {
  if (which < 1 || which > 4)
    throw std::invalid_argument("fixture_j: index must be 1..4");
  require_tree_or_even_cycle_components(base);
  Graph f = join(make_complete(1), base);  // apex is vertex 0
  const int w = 0;

  // Colour classes of base, |A| as small as possible (choose the smaller
  // side per component), both shifted by one to index into f.
  auto coloring = bipartition(base);
  std::vector<int> a_side, b_side;
  for (const auto& comp : connected_components(base)) {
    std::vector<int> side[2];
    for (int v : comp) side[(*coloring)[v]].push_back(v);
    int small = side[0].size() <= side[1].size() ? 0 : 1;
    for (int v : side[small]) a_side.push_back(v + 1);
    for (int v : side[1 - small]) b_side.push_back(v + 1);
  }

  std::set<int> a_set(a_side.begin(), a_side.end());
  CrackAssignment assignment;
  if (which <= 3) {
    assignment.independent_set = b_side;
    for (auto e : incident_edges(f, b_side)) {
      int other = std::count(b_side.begin(), b_side.end(), e.first)
                      ? e.second
                      : e.first;
      CrackType type;
      if (which == 1)
        type = CrackType::type_one;
      else if (which == 2)
        type = CrackType::type_two;
      else
        type = other == w ? CrackType::type_one : CrackType::type_two;
      assignment.edge_types[e] = type;
    }
  } else {
    assignment.independent_set = {w};
    for (auto e : incident_edges(f, {w})) {
      int other = e.first == w ? e.second : e.first;
      assignment.edge_types[e] =
          a_set.count(other) ? CrackType::type_one : CrackType::type_two;
    }
  }
  return strip_isolated(crack(f, assignment));
}

int q_of_family(const GraphFamily& family) {
  int best = -1;
  for (const auto& [form, member] : family) {
    if (!is_bipartite(member)) continue;
    int q = independent_covering_number(member);
    if (best < 0 || q < best) best = q;
  }
  if (best < 0)
    throw std::domain_error("q_of_family: no bipartite member");
  return best;
}

}  // namespace turan

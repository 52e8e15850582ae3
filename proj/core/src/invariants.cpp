#include "turan/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace turan {

namespace {

void require_small(const Graph& g, const char* op) {
  if (g.order() > 64)
    throw std::invalid_argument(std::string(op) +
                                ": exact search supports at most 64 vertices");
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (auto [u, v] : g.edge_list()) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  return adj;
}

struct Blossom {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, parent, base;
  std::vector<bool> used, in_blossom;

  explicit Blossom(const Graph& graph)
      : g(graph),
        n(graph.order()),
        adj(n),
        match(n, -1),
        parent(n),
        base(n),
        used(n),
        in_blossom(n) {
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  }

  int lowest_common_ancestor(int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = true;
      in_blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    for (int v = 0; v < n; ++v) base[v] = v;
    used[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle found: contract the blossom.
          int b = lowest_common_ancestor(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int u = 0; u < n; ++u)
            if (in_blossom[base[u]]) {
              base[u] = b;
              if (!used[u]) {
                used[u] = true;
                queue.push_back(u);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  }

  int solve() {
    int result = 0;
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int u = find_augmenting_path(v);
      if (u == -1) continue;
      ++result;
      while (u != -1) {
        int pv = parent[u], next = match[pv];
        match[u] = pv;
        match[pv] = u;
        u = next;
      }
    }
    return result;
  }
};

struct CoverSearch {
  const std::vector<std::pair<int, int>>& edges;
  const std::vector<std::uint64_t>& adj;
  int best;

  void run(std::uint64_t removed, int taken) {
    if (taken >= best) return;
    int pick = -1, pick_degree = -1;
    for (auto [u, v] : edges) {
      if ((removed >> u) & 1 || (removed >> v) & 1) continue;
      for (int x : {u, v}) {
        int d = std::popcount(adj[x] & ~removed);
        if (d > pick_degree) {
          pick_degree = d;
          pick = x;
        }
      }
    }
    if (pick == -1) {
      best = taken;
      return;
    }
    // Either pick joins the cover, or all of its remaining neighbours must.
    run(removed | (1ull << pick), taken + 1);
    std::uint64_t forced = adj[pick] & ~removed;
    run(removed | forced | (1ull << pick), taken + std::popcount(forced));
  }
};

struct IndependentSetSearch {
  const std::vector<std::uint64_t>& adj;
  int best = 0;

  void run(std::uint64_t candidates, int taken) {
    if (taken + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = std::max(best, taken);
      return;
    }
    int pick = -1, pick_degree = -1;
    std::uint64_t rest = candidates;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(adj[v] & candidates);
      if (d > pick_degree) {
        pick_degree = d;
        pick = v;
      }
    }
    run(candidates & ~(1ull << pick) & ~adj[pick], taken + 1);
    if (pick_degree > 0) run(candidates & ~(1ull << pick), taken);
    // A dominating isolated pick (degree 0) is always taken.
  }
};

struct ColoringSearch {
  const std::vector<std::uint64_t>& adj;
  int n, colors;
  std::vector<int> color;

  bool run(int assigned, int used) {
    if (assigned == n) return true;
    int pick = -1, pick_saturation = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      std::uint64_t neighbour_colors = 0;
      std::uint64_t nb = adj[v];
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[u] != -1) neighbour_colors |= 1ull << color[u];
      }
      int sat = std::popcount(neighbour_colors);
      if (sat > pick_saturation) {
        pick_saturation = sat;
        pick = v;
      }
    }
    std::uint64_t blocked = 0;
    std::uint64_t nb = adj[pick];
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (color[u] != -1) blocked |= 1ull << color[u];
    }
    int limit = std::min(colors, used + 1);  // at most one brand-new colour
    for (int c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1) continue;
      color[pick] = c;
      if (run(assigned + 1, std::max(used, c + 1))) return true;
      color[pick] = -1;
    }
    return false;
  }
};

struct IndependentCoverSearch {
  const std::vector<std::pair<int, int>>& edges;
  const std::vector<std::uint64_t>& adj;
  int best;

  void run(std::uint64_t in, std::uint64_t out, int taken) {
    if (taken >= best) return;
    int pu = -1, pv = -1;
    for (auto [u, v] : edges) {
      if ((in >> u) & 1 || (in >> v) & 1) continue;
      bool u_out = (out >> u) & 1, v_out = (out >> v) & 1;
      if (u_out && v_out) return;  // edge can no longer be met
      if (u_out) {
        run(in | (1ull << v), out | adj[v], taken + 1);
        return;
      }
      if (v_out) {
        run(in | (1ull << u), out | adj[u], taken + 1);
        return;
      }
      pu = u;
      pv = v;
      break;
    }
    if (pu == -1) {
      best = taken;
      return;
    }
    run(in | (1ull << pu), out | adj[pu], taken + 1);
    run(in | (1ull << pv), out | adj[pv] | (1ull << pu), taken + 1);
  }
};

}  // namespace

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int matching_number(const Graph& g) {
  if (g.size() == 0) return 0;
  return Blossom(g).solve();
}

int covering_number(const Graph& g) {
  require_small(g, "covering_number");
  auto edges = g.edge_list();
  if (edges.empty()) return 0;
  auto adj = adjacency_masks(g);
  CoverSearch search{edges, adj, g.order()};
  search.run(0, 0);
  return search.best;
}

int max_independent_set(const Graph& g) {
  require_small(g, "max_independent_set");
  auto adj = adjacency_masks(g);
  std::uint64_t all = g.order() == 64 ? ~0ull : ((1ull << g.order()) - 1);
  IndependentSetSearch search{adj};
  search.run(all, 0);
  return search.best;
}

int chromatic_number(const Graph& g) {
  require_small(g, "chromatic_number");
  int n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  if (is_bipartite(g)) return 2;
  auto adj = adjacency_masks(g);
  for (int k = 3; k <= n; ++k) {
    ColoringSearch search{adj, n, k, std::vector<int>(n, -1)};
    if (search.run(0, 0)) return k;
  }
  return n;
}

int independent_covering_number(const Graph& g) {
  require_small(g, "independent_covering_number");
  auto coloring = bipartition(g);
  if (!coloring)
    throw std::domain_error(
        "independent_covering_number: graph is not bipartite");
  auto edges = g.edge_list();
  if (edges.empty()) return 0;
  auto adj = adjacency_masks(g);
  // Either colour class restricted to non-isolated vertices is an
  // independent covering, giving the initial bound.
  int side[2] = {0, 0};
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) ++side[(*coloring)[v]];
  IndependentCoverSearch search{edges, adj, std::min(side[0], side[1])};
  search.run(0, 0, 0);
  return search.best;
}

}  // namespace turan

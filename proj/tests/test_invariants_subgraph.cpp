#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "turan/family.hpp"
#include "turan/graph.hpp"
#include "turan/invariants.hpp"
#include "turan/subgraph.hpp"

using namespace turan;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph make_petersen() {
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return petersen;
}

// Subset-DP matching oracle, independent of the blossom implementation.
int matching_brute(const Graph& g) {
  int n = g.order();
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edge_list()) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  std::vector<int> memo(1ull << n, -1);
  memo[0] = 0;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    int best = memo[rest];  // v unmatched
    std::uint64_t partners = adj[v] & rest;
    while (partners) {
      int u = std::countr_zero(partners);
      partners &= partners - 1;
      best = std::max(best, 1 + memo[rest & ~(1ull << u)]);
    }
    memo[mask] = best;
  }
  return memo[(1ull << n) - 1];
}

// Exhaustive injective-map containment oracle.
bool contains_brute(const Graph& host, const Graph& pattern) {
  int nh = host.order(), np = pattern.order();
  if (np > nh) return false;
  std::vector<bool> pick(nh, false);
  std::fill(pick.end() - np, pick.end(), true);
  auto pattern_edges = pattern.edge_list();
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> image;
    for (int v = 0; v < nh; ++v)
      if (pick[v]) image.push_back(v);
    std::sort(image.begin(), image.end());
    do {
      bool ok = true;
      for (auto [u, v] : pattern_edges)
        if (!host.adjacent(image[u], image[v])) {
          ok = false;
          break;
        }
      if (ok) return true;
    } while (std::next_permutation(image.begin(), image.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace

TEST_CASE("matching number of named graphs") {
  CHECK(matching_number(make_cycle(5)) == 2);
  CHECK(matching_number(make_matching(4)) == 4);
  CHECK(matching_number(make_star(7)) == 1);
  CHECK(matching_number(make_empty(5)) == 0);
  CHECK(matching_number(make_complete(7)) == 3);
  CHECK(matching_number(make_petersen()) == 5);
}

TEST_CASE("blossom matching agrees with subset DP on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 0.1 + (i % 8) / 10.0);
    CHECK(matching_number(g) == matching_brute(g));
  }
}

TEST_CASE("covering number examples") {
  CHECK(covering_number(make_complete(3)) == 2);
  CHECK(covering_number(make_star(5)) == 1);
  CHECK(covering_number(make_path(4)) == 2);
  CHECK(covering_number(make_empty(6)) == 0);
  CHECK(max_degree(make_complete(3)) == 2);
  CHECK(chromatic_number(make_complete(3)) == 3);
}

TEST_CASE("Gallai identity and matching sandwich on random graphs") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 120; ++i) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(rng, n, 0.15 + (i % 7) / 10.0);
    int alpha = max_independent_set(g);
    int beta = covering_number(g);
    int nu = matching_number(g);
    CHECK(alpha + beta == n);  // two independent searches
    CHECK(nu <= beta);
    CHECK(beta <= 2 * nu);
  }
}

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(make_empty(4)) == 1);
  CHECK(chromatic_number(make_path(5)) == 2);
  CHECK(chromatic_number(make_cycle(7)) == 3);
  CHECK(chromatic_number(make_complete(6)) == 6);
  CHECK(chromatic_number(make_wheel(2)) == 3);
  CHECK(chromatic_number(make_wheel(3)) == 3);
  Graph odd_wheel = join(make_complete(1), make_cycle(5));
  CHECK(chromatic_number(odd_wheel) == 4);
  Graph two_k4 = disjoint_union(make_complete(4), make_complete(4));
  CHECK(chromatic_number(two_k4) == 4);
}

TEST_CASE("independent covering number") {
  CHECK(independent_covering_number(make_complete_bipartite(2, 3)) == 2);
  CHECK(independent_covering_number(make_path(4)) == 2);
  CHECK(independent_covering_number(make_cycle(6)) == 3);
  CHECK(independent_covering_number(make_empty(4)) == 0);
  CHECK(independent_covering_number(make_star(6)) == 1);
  CHECK(independent_covering_number(make_matching(4)) == 4);
  CHECK_THROWS_AS(independent_covering_number(make_cycle(5)),
                  std::domain_error);
  CHECK_THROWS_AS(independent_covering_number(make_complete(3)),
                  std::domain_error);
}

TEST_CASE("independent covering number vs exhaustive enumeration") {
  std::mt19937_64 rng(37);
  int done = 0;
  while (done < 60) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 0.3);
    if (!is_bipartite(g)) continue;
    ++done;
    int best = n + 1;
    auto edges = g.edge_list();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      bool ok = true;
      for (auto [u, v] : edges) {
        if (((mask >> u) & 1) && ((mask >> v) & 1)) ok = false;  // dependent
        if (!((mask >> u) & 1) && !((mask >> v) & 1)) ok = false;  // uncovered
        if (!ok) break;
      }
      if (ok) best = std::min(best, std::popcount(mask));
    }
    CHECK(independent_covering_number(g) == best);
  }
}

TEST_CASE("subgraph containment basics") {
  CHECK(contains_subgraph(make_complete(4), make_complete(3)));
  CHECK_FALSE(contains_subgraph(make_turan(6, 2), make_cycle(5)));
  CHECK(contains_subgraph(make_cycle(6), make_path(4)));
  CHECK_FALSE(contains_subgraph(make_star(5), make_path(4)));
  CHECK(contains_subgraph(make_wheel(3), make_cycle(6)));
  for (const Graph& g : {make_petersen(), make_wheel(2), make_path(6)})
    CHECK(contains_subgraph(g, g));
}

TEST_CASE("subgraph search agrees with brute force") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 150; ++i) {
    int nh = 2 + static_cast<int>(rng() % 6);
    int np = 1 + static_cast<int>(rng() % nh);
    Graph host = random_graph(rng, nh, 0.5);
    Graph pattern = random_graph(rng, np, 0.5);
    bool expected = contains_brute(host, pattern);
    for (bool twins : {false, true}) {
      EmbedOptions opt;
      opt.twin_reduction = twins;
      auto result = find_embedding(host, pattern, opt);
      CHECK((result.outcome == EmbedOutcome::found) == expected);
      if (result.outcome == EmbedOutcome::found)
        CHECK(verify_embedding(host, pattern, result.witness));
    }
  }
}

TEST_CASE("containment is monotone under adding host edges") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    Graph host = random_graph(rng, 7, 0.3);
    Graph pattern = random_graph(rng, 4, 0.5);
    bool before = contains_subgraph(host, pattern);
    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (!host.adjacent(u, v)) non_edges.emplace_back(u, v);
    if (non_edges.empty()) continue;
    auto [u, v] = non_edges[rng() % non_edges.size()];
    host.add_edge(u, v);
    if (before) CHECK(contains_subgraph(host, pattern));
  }
}

TEST_CASE("bipartite iff no odd cycle") {
  std::mt19937_64 rng(88);
  for (int i = 0; i < 50; ++i) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.35);
    bool any_odd_cycle = false;
    for (int len = 3; len <= n; len += 2)
      if (contains_subgraph(g, make_cycle(len))) {
        any_odd_cycle = true;
        break;
      }
    CHECK(is_bipartite(g) == !any_odd_cycle);
  }
}

TEST_CASE("embedding budget gives an explicit indeterminate outcome") {
  Graph host = make_turan(24, 2);
  Graph pattern = make_cycle(9);  // absent, needs real search
  EmbedOptions opt;
  opt.max_nodes = 3;
  opt.twin_reduction = false;
  auto result = find_embedding(host, pattern, opt);
  CHECK(result.outcome == EmbedOutcome::budget_exhausted);
  CHECK(result.nodes >= 3);

  opt.max_nodes = 0;
  CHECK(find_embedding(host, pattern, opt).outcome == EmbedOutcome::absent);
}

TEST_CASE("anchored embedding requires the anchor vertex") {
  Graph host(5);
  host.add_edge(0, 1);
  host.add_edge(1, 2);
  host.add_edge(2, 3);
  EmbedOptions opt;
  opt.anchor_host_vertex = 4;  // isolated, cannot carry a P_3 vertex
  CHECK(find_embedding(host, make_path(3), opt).outcome ==
        EmbedOutcome::absent);
  opt.anchor_host_vertex = 1;
  auto hit = find_embedding(host, make_path(3), opt);
  CHECK(hit.outcome == EmbedOutcome::found);
  CHECK(std::find(hit.witness.begin(), hit.witness.end(), 1) !=
        hit.witness.end());
}

TEST_CASE("patterns with isolated vertices") {
  Graph pattern = disjoint_union(make_complete(2), make_empty(2));
  CHECK(contains_subgraph(make_path(4), pattern));
  CHECK_FALSE(contains_subgraph(make_path(3), pattern));  // only 3 vertices
  Graph edge_plus_one = disjoint_union(make_complete(2), make_empty(1));
  CHECK(contains_subgraph(make_path(3), edge_plus_one));
}

TEST_CASE("family freeness") {
  GraphFamily family{make_complete(3)};
  CHECK_FALSE(is_family_free(make_complete(6), family));
  CHECK(is_family_free(make_turan(8, 2), family));
  CHECK(is_family_free(make_empty(9),
                       GraphFamily{make_matching(2), make_path(3)}));
  CHECK(is_family_free(make_star(9), GraphFamily{make_matching(2)}));
}

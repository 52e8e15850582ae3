#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "turan/ballooning.hpp"
#include "turan/canonical.hpp"
#include "turan/cracking.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/invariants.hpp"
#include "turan/subgraph.hpp"

using namespace turan;

namespace {

Graph random_connected_skeleton(std::mt19937_64& rng, int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v);
  std::bernoulli_distribution coin(0.3);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("balloon of a single edge is an odd cycle") {
  auto spec = BalloonSpec::uniform(make_complete(2), 5);
  auto result = odd_balloon(spec);
  CHECK(is_isomorphic(result.graph, make_cycle(5)));
  CHECK(result.cycles.size() == 1);
  CHECK(result.cycles[0].second.size() == 5);
}

TEST_CASE("balloon of a star with triangles is the friendship graph") {
  for (int t = 1; t <= 4; ++t) {
    auto spec = BalloonSpec::uniform(make_star(t + 1), 3);
    Graph balloon = odd_balloon(spec).graph;
    CHECK(is_isomorphic(balloon, make_friendship(t)));
    CHECK(is_isomorphic(balloon, join(make_complete(1), make_matching(t))));
  }
}

TEST_CASE("balloon sizes") {
  auto k3 = BalloonSpec::uniform(make_complete(3), 5);
  auto [v3, e3] = balloon_sizes(k3);
  CHECK(v3 == 12);
  CHECK(e3 == 15);
  Graph built = odd_balloon(k3).graph;
  CHECK(built.order() == v3);
  CHECK(built.size() == e3);

  auto w5 = BalloonSpec::uniform(make_wheel(2), 5);
  auto [vw, ew] = balloon_sizes(w5);
  CHECK(vw == 29);
  CHECK(ew == 40);

  auto s3 = BalloonSpec::uniform(make_star(3), 5);
  auto [vs, es] = balloon_sizes(s3);
  CHECK(vs == 9);
  CHECK(es == 10);

  auto edge5 = BalloonSpec::uniform(make_complete(2), 5);
  auto [ve, ee] = balloon_sizes(edge5);
  CHECK(ve == 5);
  CHECK(ee == 5);
}

TEST_CASE("balloon length validation") {
  CHECK_THROWS_AS(BalloonSpec::uniform(make_complete(2), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(BalloonSpec::uniform(make_complete(2), 1),
                  std::invalid_argument);
  BalloonSpec missing{make_path(3), {}};
  CHECK_THROWS_AS(odd_balloon(missing), std::invalid_argument);
  CHECK(BalloonSpec::uniform(make_complete(3), 7).lengths_at_least_five());
  CHECK_FALSE(BalloonSpec::uniform(make_complete(3), 3)
                  .lengths_at_least_five());
}

TEST_CASE("skeleton embeds identically in its balloon and cycles are fresh") {
  std::mt19937_64 rng(3);
  std::vector<int> odd_lengths{3, 5, 7, 9};
  for (int i = 0; i < 200; ++i) {
    Graph skeleton = random_connected_skeleton(rng, 2 + static_cast<int>(rng() % 5));
    BalloonSpec spec{skeleton, {}};
    for (auto e : skeleton.edge_list())
      spec.lengths[e] = odd_lengths[rng() % odd_lengths.size()];
    auto result = odd_balloon(spec);

    // The skeleton is a subgraph via the identity on original vertices.
    for (auto [u, v] : skeleton.edge_list())
      CHECK(result.graph.adjacent(u, v));

    // Reported sizes match the built graph.
    auto [nv, ne] = balloon_sizes(spec);
    CHECK(result.graph.order() == nv);
    CHECK(result.graph.size() == ne);

    // Fresh vertices of distinct cycles are disjoint.
    std::set<int> seen;
    for (const auto& [edge, cycle] : result.cycles) {
      CHECK(static_cast<int>(cycle.size()) == spec.lengths.at(edge));
      for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
        CHECK(cycle[i] >= skeleton.order());
        CHECK(seen.insert(cycle[i]).second);
      }
      // Consecutive cycle vertices are adjacent and the edge closes it.
      for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
        CHECK(result.graph.adjacent(cycle[i], cycle[i + 1]));
      CHECK(result.graph.adjacent(cycle.front(), cycle.back()));
    }
  }
}

TEST_CASE("balloon spec serialization round trip") {
  BalloonSpec spec{make_path(3), {}};
  spec.lengths[{0, 1}] = 5;
  spec.lengths[{1, 2}] = 7;

  auto from_text = parse_balloon_spec(format_balloon_spec_text(spec));
  CHECK(from_text.skeleton == spec.skeleton);
  CHECK(from_text.lengths == spec.lengths);

  auto from_json = parse_balloon_spec(format_balloon_spec_json(spec));
  CHECK(from_json.skeleton == spec.skeleton);
  CHECK(from_json.lengths == spec.lengths);

  CHECK_THROWS_AS(parse_balloon_spec("not a spec"), std::invalid_argument);
}

TEST_CASE("crack of a triangle") {
  Graph k3 = make_complete(3);
  // Crack vertex 0, whose incident edges are (0,1) and (0,2).
  CrackAssignment both_one{{0},
                           {{{0, 1}, CrackType::type_one},
                            {{0, 2}, CrackType::type_one}}};
  CHECK(is_isomorphic(crack(k3, both_one), make_path(4)));

  CrackAssignment mixed{{0},
                        {{{0, 1}, CrackType::type_one},
                         {{0, 2}, CrackType::type_two}}};
  CHECK(is_isomorphic(crack(k3, mixed),
                      disjoint_union(make_path(3), make_complete(2))));

  CrackAssignment both_two{{0},
                           {{{0, 1}, CrackType::type_two},
                            {{0, 2}, CrackType::type_two}}};
  CHECK(is_isomorphic(crack(k3, both_two), make_matching(3)));

  // Empty U leaves the graph unchanged.
  CHECK(crack(k3, CrackAssignment{}) == k3);
}

TEST_CASE("crack validation") {
  Graph k3 = make_complete(3);
  CrackAssignment dependent{{0, 1}, {}};
  CHECK_THROWS_AS(crack(k3, dependent), std::invalid_argument);

  CrackAssignment incomplete{{0}, {{{0, 1}, CrackType::type_one}}};
  CHECK_THROWS_AS(crack(k3, incomplete), std::invalid_argument);

  CrackAssignment extra{{0},
                        {{{0, 1}, CrackType::type_one},
                         {{0, 2}, CrackType::type_one},
                         {{1, 2}, CrackType::type_one}}};
  CHECK_THROWS_AS(crack(k3, extra), std::invalid_argument);
}

TEST_CASE("crack vertex count identity") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Graph f = random_connected_skeleton(rng, 3 + static_cast<int>(rng() % 5));
    // Random independent set.
    std::vector<int> u;
    for (int v = 0; v < f.order(); ++v) {
      bool clash = false;
      for (int w : u)
        if (f.adjacent(v, w)) clash = true;
      if (!clash && rng() % 2) u.push_back(v);
    }
    CrackAssignment a{u, {}};
    int degree_sum = 0, type_two = 0;
    std::set<int> in_u(u.begin(), u.end());
    for (auto e : f.edge_list()) {
      if (!in_u.count(e.first) && !in_u.count(e.second)) continue;
      bool two = rng() % 2;
      a.edge_types[e] = two ? CrackType::type_two : CrackType::type_one;
      type_two += two;
    }
    for (int v : u) degree_sum += f.degree(v);
    Graph cracked = crack(f, a);
    CHECK(cracked.order() ==
          f.order() - static_cast<int>(u.size()) + degree_sum + type_two);
    CHECK(cracked.size() == f.size());  // edge conservation
  }
}

TEST_CASE("crack family of a triangle vertex") {
  auto family = crack_family(make_complete(3), {0});
  GraphFamily expected{make_path(4),
                       disjoint_union(make_path(3), make_complete(2)),
                       make_matching(3)};
  CHECK(family == expected);
}

TEST_CASE("crack family edge cases") {
  // Both type choices on a cracked single edge give just the edge itself
  // (the stranded endpoint is dropped from the family member).
  auto family = crack_family(make_complete(2), {0});
  CHECK(family == GraphFamily{make_complete(2)});

  CHECK(crack_family(make_path(3), {}) == GraphFamily{make_path(3)});
  CHECK_THROWS_AS(crack_family(make_complete(3), {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("cracking family of small graphs") {
  CHECK(cracking_family(make_complete(2)) == GraphFamily{make_complete(2)});

  GraphFamily k3_family = cracking_family(make_complete(3));
  GraphFamily expected{make_complete(3), make_path(4),
                       disjoint_union(make_path(3), make_complete(2)),
                       make_matching(3)};
  CHECK(k3_family == expected);
}

TEST_CASE("cracking family members conserve edge count") {
  for (const Graph& f : {make_wheel(2), make_book(2), make_friendship(2)}) {
    auto family = cracking_family(f);
    CHECK(family.size() > 1);
    for (const auto& [form, member] : family) CHECK(member.size() == f.size());
  }
}

TEST_CASE("orbit-reduced enumeration matches full enumeration") {
  // cracking_family dedups independent sets by automorphism orbit; brute
  // force over every independent set must give the same family.
  for (const Graph& f :
       {make_complete(3), make_wheel(2), make_book(2), make_path(4)}) {
    GraphFamily full;
    int n = f.order();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::vector<int> u;
      bool independent = true;
      for (int v = 0; v < n && independent; ++v)
        if ((mask >> v) & 1) {
          for (int w : u)
            if (f.adjacent(v, w)) independent = false;
          u.push_back(v);
        }
      if (!independent) continue;
      full.merge(crack_family(f, u));
    }
    CHECK(cracking_family(f) == full);
  }
}

TEST_CASE("fixtures match their closed forms") {
  // Base C_4: the star-plus-matching fixture is S_5 + M_4.
  CHECK(is_isomorphic(fixture_j(make_cycle(4), 3),
                      disjoint_union(make_star(5), make_matching(4))));
  // Base M_2: the all-fresh fixture is S_3 + M_4.
  CHECK(is_isomorphic(fixture_j(make_matching(2), 2),
                      disjoint_union(make_star(3), make_matching(4))));
}

TEST_CASE("fixtures are members of the cracking family") {
  for (const Graph& base :
       {make_cycle(4), make_matching(2), make_path(3), make_star(4)}) {
    Graph skeleton = join(make_complete(1), base);
    auto family = cracking_family(skeleton);
    for (int which = 1; which <= 4; ++which)
      CHECK(family.contains_isomorphic(fixture_j(base, which)));
  }
}

TEST_CASE("fixture validation") {
  CHECK_THROWS_AS(fixture_j(make_cycle(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(fixture_j(make_cycle(4), 5), std::invalid_argument);
  CHECK_THROWS_AS(fixture_j(make_cycle(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(fixture_j(make_complete(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(fixture_j(make_empty(3), 1), std::invalid_argument);
}

TEST_CASE("q of the cracking family") {
  CHECK(q_of_family(cracking_family(make_complete(3))) == 2);
  CHECK(q_of_family(cracking_family(make_wheel(2))) == 4);
  CHECK(q_of_family(cracking_family(make_friendship(2))) == 3);
  GraphFamily no_bipartite{make_complete(3)};
  CHECK_THROWS_AS(q_of_family(no_bipartite), std::domain_error);
}

TEST_CASE("all-type-one crack keeps the neighbourhood intact") {
  // Cracking one vertex with every edge type one: the old neighbourhood
  // keeps its internal edges and gains one fresh degree-1 vertex per edge.
  Graph wheel = make_wheel(2);  // apex 0, rim 1..4
  CrackAssignment a{{0}, {}};
  for (auto e : wheel.edge_list())
    if (e.first == 0) a.edge_types[e] = CrackType::type_one;
  Graph cracked = crack(wheel, a);
  CHECK(cracked.order() == 4 + 4);
  CHECK(cracked.size() == 8);
  // Rim cycle survives: the first four vertices keep their C_4.
  CHECK(is_isomorphic(strip_isolated(cracked), cracked));
  int degree_one = 0;
  for (int v = 0; v < cracked.order(); ++v)
    if (cracked.degree(v) == 1) ++degree_one;
  CHECK(degree_one == 4);
}

#include "turan/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "turan/invariants.hpp"
#include "turan/subgraph.hpp"

namespace turan {

namespace {

// All isomorphism classes with at most max_order vertices and at most
// max_edges edges, by vertex extension with canonical-form dedup per level.
std::vector<Graph> enumerate_classes(int max_order, long long max_edges) {
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(0)};
  out.push_back(level[0]);
  for (int k = 0; k < max_order; ++k) {
    std::map<CanonicalForm, Graph> next;
    for (const auto& parent : level) {
      for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        if (parent.size() + std::popcount(mask) > max_edges) continue;
        Graph child(k + 1);
        for (auto [u, v] : parent.edge_list()) child.add_edge(u, v);
        for (int v = 0; v < k; ++v)
          if ((mask >> v) & 1) child.add_edge(v, k);
        auto form = canonical_form(child);
        next.emplace(std::move(form), std::move(child));
      }
    }
    level.clear();
    for (auto& [form, g] : next) {
      out.push_back(g);
      level.push_back(std::move(g));
    }
  }
  return out;
}

int min_degree(const Graph& g) {
  int d = g.order() == 0 ? 0 : g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

}  // namespace

DecompositionResult decomposition_family_bruteforce(
    const Graph& target, const DecompositionOptions& options) {
  int r = options.r;
  if (r < 2)
    throw std::invalid_argument("decomposition family: r must be >= 2");
  if (options.size_cap < 1)
    throw std::invalid_argument("decomposition family: size cap must be >= 1");
  if (r == 2 && is_bipartite(target))
    throw std::domain_error(
        "decomposition family: target must have chromatic number r + 1, got "
        "a bipartite graph with r = 2");
  if (chromatic_number(target) != r + 1)
    throw std::domain_error(
        "decomposition family: target must have chromatic number r + 1");

  int t_max = options.t_max > 0 ? options.t_max : target.order();
  DecompositionResult result;

  // The property is monotone in t (larger hosts contain smaller ones), so
  // scanning upward and stopping at the first success is exact; a candidate
  // fails only if it fails at t_max.
  enum class Property { yes, no, indeterminate };
  auto property = [&](const Graph& m) {
    bool budget_hit = false;
    for (int t = 1; t <= t_max; ++t) {
      if (m.order() + t + (r - 1) * t < target.order()) continue;
      Graph host = join(disjoint_union(m, make_empty(t)),
                        make_turan((r - 1) * t, r - 1));
      EmbedOptions opt;
      opt.max_nodes = options.embed_budget;
      auto embed = find_embedding(host, target, opt);
      result.embed_nodes += embed.nodes;
      if (embed.outcome == EmbedOutcome::found) return Property::yes;
      if (embed.outcome == EmbedOutcome::budget_exhausted) budget_hit = true;
    }
    return budget_hit ? Property::indeterminate : Property::no;
  };

  // Candidates: no isolated vertices (a minimal member never has any, since
  // an isolated vertex is interchangeable with the E_t padding) and at most
  // e(target) edges, scanned in increasing edge count so that accepted
  // members filter their supergraphs early.
  std::vector<Graph> candidates;
  for (auto& g : enumerate_classes(options.size_cap, target.size()))
    if (g.size() >= 1 && min_degree(g) >= 1) candidates.push_back(std::move(g));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Graph& a, const Graph& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.order() < b.order();
                   });

  for (const auto& m : candidates) {
    bool dominated = false;
    for (const auto& [form, member] : result.members)
      if (contains_subgraph(m, member)) {
        dominated = true;
        break;
      }
    if (dominated) continue;

    auto verdict = property(m);
    if (verdict == Property::indeterminate) {
      result.complete = false;
      result.indeterminate_candidates.push_back(m);
      continue;
    }
    if (verdict == Property::no) continue;

    // Local minimality: no single edge deletion may keep the property
    // (isolated-vertex deletions cannot apply -- min degree is >= 1).
    bool minimal = true, uncertain = false;
    std::set<CanonicalForm> tested;
    for (auto e : m.edge_list()) {
      Graph smaller = m;
      smaller.remove_edge(e.first, e.second);
      if (!tested.insert(canonical_form(smaller)).second) continue;
      auto sub = property(smaller);
      if (sub == Property::indeterminate) uncertain = true;
      if (sub == Property::yes) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (uncertain) {
      result.complete = false;
      result.indeterminate_candidates.push_back(m);
      continue;
    }

    result.members.insert(m);
    if (m.order() == options.size_cap) result.members_at_cap = true;
  }
  return result;
}

}  // namespace turan

#include "turan/extremal_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>

#include "turan/invariants.hpp"
#include "turan/subgraph.hpp"

namespace turan {

namespace {

constexpr int kGuardrail = 10;

struct LevelOutput {
  std::map<CanonicalForm, Graph> classes;
  long long best = -1;  // only tracked at the final level
  std::uint64_t nodes = 0;
};

struct Extender {
  const SearchJob& job;
  int level;      // parents have this many vertices
  bool is_final;  // children are n-vertex graphs

  // A child is admissible if it satisfies every constraint; all constraints
  // are monotone under adding edges, so children of pruned parents need not
  // be revisited.
  bool admissible(const Graph& child, int new_degree,
                  const std::vector<int>& parent_degrees,
                  std::uint64_t mask) const {
    if (job.max_degree) {
      if (new_degree > *job.max_degree) return false;
      for (int v = 0; v < level; ++v)
        if ((mask >> v) & 1 && parent_degrees[v] + 1 > *job.max_degree)
          return false;
    }
    if (job.max_matching && matching_number(child) > *job.max_matching)
      return false;
    // Parents are forbidden-free, so any new copy must use the new vertex.
    for (const auto& [form, member] : job.forbidden) {
      if (member.size() > child.size()) continue;
      EmbedOptions opt;
      opt.anchor_host_vertex = level;
      opt.twin_reduction = false;
      if (find_embedding(child, member, opt).outcome == EmbedOutcome::found)
        return false;
    }
    return true;
  }

  LevelOutput extend(const std::vector<Graph>& parents, std::size_t begin,
                     std::size_t end) const {
    LevelOutput out;
    std::vector<int> parent_degrees(level);
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& parent = parents[i];
      auto parent_edges = parent.edge_list();
      for (int v = 0; v < level; ++v) parent_degrees[v] = parent.degree(v);
      for (std::uint64_t mask = 0; mask < (1ull << level); ++mask) {
        ++out.nodes;
        int new_degree = std::popcount(mask);
        long long edges = parent.size() + new_degree;
        if (is_final && edges < out.best) continue;
        Graph child(level + 1);
        for (auto [u, v] : parent_edges) child.add_edge(u, v);
        for (int v = 0; v < level; ++v)
          if ((mask >> v) & 1) child.add_edge(v, level);
        if (!admissible(child, new_degree, parent_degrees, mask)) continue;
        if (is_final) {
          if (edges > out.best) {
            out.best = edges;
            if (job.collect_witnesses) out.classes.clear();
          }
          if (!job.collect_witnesses) continue;
        }
        auto form = canonical_form(child);
        out.classes.emplace(std::move(form), std::move(child));
      }
    }
    return out;
  }
};

}  // namespace

SearchResult exact_ex(const SearchJob& job) {
  if (job.n < 0) throw std::invalid_argument("search: negative n");
  if (job.n > kGuardrail && !job.override_guardrail)
    throw std::invalid_argument(
        "search: n > 10 requires override_guardrail (isomorphism classes "
        "grow explosively)");
  for (const auto& [form, member] : job.forbidden)
    if (member.size() == 0)
      throw std::invalid_argument(
          "search: forbidden members must have at least one edge");
  if (job.max_matching && *job.max_matching < 0)
    throw std::invalid_argument("search: negative matching cap");
  if (job.max_degree && *job.max_degree < 0)
    throw std::invalid_argument("search: negative degree cap");

  SearchResult result;
  std::vector<Graph> level{Graph(0)};
  long long final_best = -1;
  std::map<CanonicalForm, Graph> final_classes;

  for (int k = 0; k < job.n; ++k) {
    bool is_final = k + 1 == job.n;
    Extender extender{job, k, is_final};
    int workers = std::max(
        1, std::min(job.threads, static_cast<int>(level.size())));
    std::vector<LevelOutput> outputs(workers);
    if (workers == 1) {
      outputs[0] = extender.extend(level, 0, level.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (level.size() + workers - 1) / workers;
      for (int t = 0; t < workers; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(level.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, t, begin, end] {
          outputs[t] = extender.extend(level, begin, end);
        });
      }
      for (auto& th : pool) th.join();
    }

    std::map<CanonicalForm, Graph> merged;
    for (auto& out : outputs) {
      result.nodes_explored += out.nodes;
      if (is_final) final_best = std::max(final_best, out.best);
    }
    for (auto& out : outputs) {
      for (auto& [form, g] : out.classes) {
        if (is_final && g.size() < final_best) continue;
        merged.emplace(std::move(form), std::move(g));
      }
    }
    if (is_final) {
      final_classes = std::move(merged);
    } else {
      level.clear();
      level.reserve(merged.size());
      for (auto& [form, g] : merged) level.push_back(std::move(g));
    }
    if (job.node_budget && result.nodes_explored > job.node_budget) {
      result.exhaustive = false;
      if (!is_final) return result;  // never reached n-vertex graphs
    }
  }

  if (job.n == 0) {
    result.optimum = 0;
    if (job.collect_witnesses) result.witnesses.insert(Graph(0));
    return result;
  }
  result.optimum = std::max(final_best, 0ll);
  if (job.collect_witnesses)
    for (auto& [form, g] : final_classes)
      if (g.size() == result.optimum) result.witnesses.insert(g);
  return result;
}

SearchResult f_oracle(int n, int nu, int delta, int threads) {
  if (n > kGuardrail)
    throw std::invalid_argument("f_oracle: n is capped at 10");
  SearchJob job;
  job.n = n;
  job.max_matching = nu;
  job.max_degree = delta;
  job.threads = threads;
  return exact_ex(job);
}

GraphFamily extremal_witnesses(const SearchJob& job) {
  SearchJob with_witnesses = job;
  with_witnesses.collect_witnesses = true;
  return exact_ex(with_witnesses).witnesses;
}

}  // namespace turan

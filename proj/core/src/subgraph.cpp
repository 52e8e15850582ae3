#include "turan/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace turan {

namespace {

// Host vertices u, v are interchangeable when N(u)\{v} == N(v)\{u}; any
// embedding using one can use any other unused member of the class instead.
std::vector<int> twin_classes(const Graph& g) {
  int n = g.order(), words = g.row_words();
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  auto equal_modulo_pair = [&](int u, int v) {
    auto ru = g.row(u), rv = g.row(v);
    for (int w = 0; w < words; ++w) {
      std::uint64_t a = ru[w], b = rv[w];
      if (w == v >> 6) a &= ~(1ull << (v & 63));
      if (w == u >> 6) a &= ~(1ull << (u & 63));
      if (w == v >> 6) b &= ~(1ull << (v & 63));
      if (w == u >> 6) b &= ~(1ull << (u & 63));
      if (a != b) return false;
    }
    return true;
  };
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (cls[u] == u && equal_modulo_pair(u, v)) {
        cls[v] = u;
        break;
      }
  return cls;
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, const EmbedOptions& opt)
      : host_(host), pattern_(pattern), opt_(opt) {}

  EmbedResult run() {
    EmbedResult result;
    int np = pattern_.order(), nh = host_.order();
    if (np == 0) {
      result.outcome = opt_.anchor_host_vertex >= 0 ? EmbedOutcome::absent
                                                    : EmbedOutcome::found;
      return result;
    }
    if (np > nh || pattern_.size() > host_.size()) return result;

    words_ = host_.row_words();
    host_degree_.resize(nh);
    for (int v = 0; v < nh; ++v) host_degree_[v] = host_.degree(v);
    pattern_degree_.resize(np);
    for (int p = 0; p < np; ++p) pattern_degree_[p] = pattern_.degree(p);
    twins_ = opt_.twin_reduction ? twin_classes(host_) : std::vector<int>();
    used_.assign(words_, 0);
    mapped_.assign(np, -1);
    candidates_.assign(np, std::vector<std::uint64_t>(words_));

    if (opt_.anchor_host_vertex >= 0) {
      // The anchor must be in the image; try each pattern vertex as its
      // preimage and order the rest around that seed.
      for (int p = 0; p < np; ++p) {
        if (pattern_degree_[p] > host_degree_[opt_.anchor_host_vertex])
          continue;
        build_order(p);
        assign(p, opt_.anchor_host_vertex);
        bool ok = search(1);
        unassign(p, opt_.anchor_host_vertex);
        if (budget_hit_) break;
        if (ok) {
          result.outcome = EmbedOutcome::found;
          result.witness = witness_;
          break;
        }
      }
    } else {
      build_order(-1);
      if (search(0)) {
        result.outcome = EmbedOutcome::found;
        result.witness = witness_;
      }
    }
    if (budget_hit_) result.outcome = EmbedOutcome::budget_exhausted;
    result.nodes = nodes_;
    return result;
  }

 private:
  void build_order(int seed) {
    int np = pattern_.order();
    order_.clear();
    std::vector<bool> placed(np, false);
    auto place = [&](int p) {
      order_.push_back(p);
      placed[p] = true;
    };
    if (seed >= 0) place(seed);
    for (;;) {
      int best = -1, best_connected = -1;
      for (int p = 0; p < np; ++p) {
        if (placed[p] || pattern_degree_[p] == 0) continue;
        int connected = 0;
        for (int q : order_)
          if (pattern_.adjacent(p, q)) ++connected;
        if (connected > best_connected ||
            (connected == best_connected &&
             pattern_degree_[p] > pattern_degree_[best])) {
          best = p;
          best_connected = connected;
        }
      }
      if (best == -1) break;
      place(best);
    }
    first_isolated_ = static_cast<int>(order_.size());
    for (int p = 0; p < np; ++p)
      if (!placed[p]) place(p);
    ordered_neighbors_.assign(np, {});
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (pattern_.adjacent(order_[i], order_[j]))
          ordered_neighbors_[i].push_back(order_[j]);
  }

  void assign(int p, int v) {
    mapped_[p] = v;
    used_[v >> 6] |= 1ull << (v & 63);
  }
  void unassign(int p, int v) {
    mapped_[p] = -1;
    used_[v >> 6] &= ~(1ull << (v & 63));
  }

  bool host_used(int v) const { return (used_[v >> 6] >> (v & 63)) & 1; }

  // Search positions depth..end; returns true when a full embedding is
  // found (witness_ is then valid).
  bool search(int depth) {
    int np = pattern_.order();
    if (depth == np) {
      witness_.assign(np, -1);
      for (int p = 0; p < np; ++p) witness_[p] = mapped_[p];
      return true;
    }
    if (depth >= first_isolated_ && mapped_[order_[depth]] == -1) {
      return place_isolated(depth);
    }
    int p = order_[depth];
    if (mapped_[p] != -1) return search(depth + 1);  // pre-assigned seed

    auto& cand = candidates_[depth];
    bool have_neighbor = false;
    for (int q : ordered_neighbors_[depth]) {
      if (mapped_[q] == -1) continue;
      auto row = host_.row(mapped_[q]);
      if (!have_neighbor) {
        std::copy(row.begin(), row.end(), cand.begin());
        have_neighbor = true;
      } else {
        for (int w = 0; w < words_; ++w) cand[w] &= row[w];
      }
    }
    if (!have_neighbor) std::fill(cand.begin(), cand.end(), ~0ull);
    for (int w = 0; w < words_; ++w) cand[w] &= ~used_[w];
    int spare = words_ * 64 - host_.order();
    if (spare > 0) cand[words_ - 1] &= ~0ull >> spare;

    tried_twin_stack_.emplace_back();
    const std::size_t tried_index = tried_twin_stack_.size() - 1;
    bool found = false;
    for (int w = 0; w < words_ && !found; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (host_degree_[v] < pattern_degree_[p]) continue;
        if (!twins_.empty()) {
          // Index access: recursion below grows the stack, which may move it.
          auto& tried = tried_twin_stack_[tried_index];
          int c = twins_[v];
          if (std::find(tried.begin(), tried.end(), c) != tried.end())
            continue;
          tried.push_back(c);
        }
        ++nodes_;
        if (opt_.max_nodes && nodes_ > opt_.max_nodes) {
          budget_hit_ = true;
          break;
        }
        assign(p, v);
        if (search(depth + 1)) {
          found = true;
          break;
        }
        unassign(p, v);
        if (budget_hit_) break;
      }
      if (budget_hit_) break;
    }
    tried_twin_stack_.pop_back();
    return found;
  }

  // All remaining pattern vertices are isolated; any unused host vertices
  // will do, so there is nothing left to branch on.
  bool place_isolated(int depth) {
    int np = pattern_.order();
    std::vector<int> open;
    for (int i = depth; i < np; ++i)
      if (mapped_[order_[i]] == -1) open.push_back(order_[i]);
    std::vector<int> free;
    for (int v = 0;
         v < host_.order() && free.size() < open.size(); ++v)
      if (!host_used(v)) free.push_back(v);
    if (free.size() < open.size()) return false;
    for (std::size_t i = 0; i < open.size(); ++i) assign(open[i], free[i]);
    bool ok = search(np);
    if (!ok)
      for (std::size_t i = 0; i < open.size(); ++i)
        unassign(open[i], free[i]);
    return ok;
  }

  const Graph& host_;
  const Graph& pattern_;
  EmbedOptions opt_;
  int words_ = 0;
  int first_isolated_ = 0;
  std::vector<int> host_degree_, pattern_degree_, twins_, order_, mapped_;
  std::vector<std::vector<int>> ordered_neighbors_;
  std::vector<std::vector<std::uint64_t>> candidates_;
  std::vector<std::uint64_t> used_;
  std::vector<std::vector<int>> tried_twin_stack_;
  std::vector<int> witness_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

EmbedResult find_embedding(const Graph& host, const Graph& pattern,
                           const EmbedOptions& options) {
  return Matcher(host, pattern, options).run();
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  return find_embedding(host, pattern).outcome == EmbedOutcome::found;
}

bool is_family_free(const Graph& host, const GraphFamily& family) {
  for (const auto& [form, member] : family)
    if (contains_subgraph(host, member)) return false;
  return true;
}

bool verify_embedding(const Graph& host, const Graph& pattern,
                      const std::vector<int>& witness) {
  if (static_cast<int>(witness.size()) != pattern.order()) return false;
  std::vector<bool> used(host.order(), false);
  for (int v : witness) {
    if (v < 0 || v >= host.order() || used[v]) return false;
    used[v] = true;
  }
  for (auto [u, v] : pattern.edge_list())
    if (!host.adjacent(witness[u], witness[v])) return false;
  return true;
}

}  // namespace turan

#include "turan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace turan {

namespace {

using Cells = std::vector<std::vector<int>>;

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g)
      : g_(g), n_(g.order()), words_(g.row_words()) {}

  CanonicalResult run() {
    CanonicalResult out;
    if (n_ == 0) {
      out.form.bytes = header();
      return out;
    }
    Cells cells{std::vector<int>(n_)};
    std::iota(cells[0].begin(), cells[0].end(), 0);
    search(cells, {});
    out.form.bytes = header() + best_cert_;
    out.labeling = best_labeling_;
    out.generators = std::move(generators_);
    return out;
  }

 private:
  std::string header() const {
    std::string h(4, '\0');
    h[0] = static_cast<char>((n_ >> 24) & 0xff);
    h[1] = static_cast<char>((n_ >> 16) & 0xff);
    h[2] = static_cast<char>((n_ >> 8) & 0xff);
    h[3] = static_cast<char>(n_ & 0xff);
    return h;
  }

  int count_in(int v, const std::vector<std::uint64_t>& mask) const {
    auto r = g_.row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(r[w] & mask[w]);
    return c;
  }

  // Coarsest equitable refinement. Subcells are ordered by their neighbour
  // count signature, which is label-invariant, so the resulting cell order
  // is the same for isomorphic graphs.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::vector<std::uint64_t>> masks(cells.size());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        masks[c].assign(words_, 0);
        for (int v : cells[c]) masks[c][v >> 6] |= 1ull << (v & 63);
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(cells.size());
          for (const auto& m : masks) sig.push_back(count_in(v, m));
          keyed.emplace_back(std::move(sig), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) {
                           return a.first < b.first;
                         });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<int> sub;
            for (std::size_t j = start; j < i; ++j)
              sub.push_back(keyed[j].second);
            std::sort(sub.begin(), sub.end());
            if (sub.size() != cell.size()) changed = true;
            next.push_back(std::move(sub));
            start = i;
          }
        }
      }
      cells = std::move(next);
    }
  }

  std::string leaf_certificate(const Cells& cells,
                               std::vector<int>& labeling) const {
    labeling.assign(n_, 0);
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) {
      order[i] = cells[i][0];
      labeling[cells[i][0]] = i;
    }
    std::string cert((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 7) / 8,
                     '\0');
    std::size_t bit = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        if (g_.adjacent(order[i], order[j]))
          cert[bit >> 3] |= static_cast<char>(1 << (7 - (bit & 7)));
        ++bit;
      }
    return cert;
  }

  void record_automorphism(const std::vector<int>& reference,
                           const std::vector<int>& other) {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[reference[v]] = v;
    std::vector<int> sigma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      sigma[v] = inv[other[v]];
      if (sigma[v] != v) identity = false;
    }
    if (!identity) generators_.push_back(std::move(sigma));
  }

  void search(Cells cells, std::vector<int> path) {
    if (++nodes_ > kNodeCap)
      throw std::runtime_error("canonical labeling: search budget exceeded");
    refine(cells);
    int target = -1;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      std::vector<int> labeling;
      std::string cert = leaf_certificate(cells, labeling);
      if (first_labeling_.empty()) {
        first_labeling_ = labeling;
        first_cert_ = cert;
      } else if (cert == first_cert_) {
        record_automorphism(first_labeling_, labeling);
      }
      if (best_cert_.empty() || cert < best_cert_) {
        best_cert_ = std::move(cert);
        best_labeling_ = std::move(labeling);
      } else if (cert == best_cert_ && labeling != best_labeling_) {
        record_automorphism(best_labeling_, labeling);
      }
      return;
    }

    std::vector<int> tried;
    for (int v : cells[target]) {
      if (int u = twin_of_tried(v, tried); u >= 0) {
        record_transposition(u, v);
        continue;
      }
      if (orbit_already_tried(v, tried, path)) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (static_cast<int>(c) != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      std::vector<int> child_path = path;
      child_path.push_back(v);
      search(std::move(child), std::move(child_path));
    }
  }

  // If N(u)\{v} == N(v)\{u}, the transposition (u v) is an automorphism
  // fixing every other vertex, so branching on one of the pair suffices.
  // This collapses complete multipartite cells without waiting for leaf
  // comparisons to discover the symmetry. Returns the twin or -1.
  int twin_of_tried(int v, const std::vector<int>& tried) const {
    for (int u : tried) {
      auto ru = g_.row(u), rv = g_.row(v);
      bool equal = true;
      for (int w = 0; w < words_ && equal; ++w) {
        std::uint64_t a = ru[w], b = rv[w];
        if (w == (v >> 6)) {
          a &= ~(1ull << (v & 63));
          b &= ~(1ull << (v & 63));
        }
        if (w == (u >> 6)) {
          a &= ~(1ull << (u & 63));
          b &= ~(1ull << (u & 63));
        }
        equal = a == b;
      }
      if (equal) return u;
    }
    return -1;
  }

  void record_transposition(int u, int v) {
    if (!recorded_swaps_.insert({std::min(u, v), std::max(u, v)}).second)
      return;
    std::vector<int> sigma(n_);
    std::iota(sigma.begin(), sigma.end(), 0);
    sigma[u] = v;
    sigma[v] = u;
    generators_.push_back(std::move(sigma));
  }

  // v can be skipped if a known automorphism that fixes the whole current
  // individualization path maps it into an orbit we already branched on.
  bool orbit_already_tried(int v, const std::vector<int>& tried,
                           const std::vector<int>& path) {
    if (tried.empty() || generators_.empty()) return false;
    DisjointSet ds(n_);
    for (const auto& sigma : generators_) {
      bool fixes_path = true;
      for (int p : path)
        if (sigma[p] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int u = 0; u < n_; ++u) ds.unite(u, sigma[u]);
    }
    for (int u : tried)
      if (ds.find(u) == ds.find(v)) return true;
    return false;
  }

  static constexpr std::uint64_t kNodeCap = 50'000'000;

  const Graph& g_;
  int n_;
  int words_;
  std::uint64_t nodes_ = 0;
  std::string best_cert_;
  std::vector<int> best_labeling_;
  std::string first_cert_;
  std::vector<int> first_labeling_;
  std::vector<std::vector<int>> generators_;
  std::set<std::pair<int, int>> recorded_swaps_;
};

}  // namespace

CanonicalResult canonical_labeling(const Graph& g) {
  return Canonicalizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  return canonical_labeling(g).form;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<int> vertex_orbits(const Graph& g) {
  auto result = canonical_labeling(g);
  DisjointSet ds(g.order());
  for (const auto& sigma : result.generators)
    for (int v = 0; v < g.order(); ++v) ds.unite(v, sigma[v]);
  std::vector<int> orbit(g.order());
  for (int v = 0; v < g.order(); ++v) orbit[v] = ds.find(v);
  return orbit;
}

Graph canonical_representative(const Graph& g) {
  auto result = canonical_labeling(g);
  if (g.order() == 0) return g;
  return g.permuted(result.labeling);
}

}  // namespace turan

#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

[[noreturn]] void bad_parameter(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    bad_parameter("vertex count out of range: " + std::to_string(n));
  words_ = n == 0 ? 1 : (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    bad_parameter("vertex index out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) bad_parameter("self-loops are not allowed");
  if (adjacent(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &=
      ~(1ull << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &=
      ~(1ull << (u & 63));
  --m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n_);
  for (int v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::permuted(std::span<const int> new_label) const {
  if (static_cast<int>(new_label.size()) != n_)
    bad_parameter("permutation size does not match vertex count");
  Graph g(n_);
  for (auto [u, v] : edge_list()) g.add_edge(new_label[u], new_label[v]);
  return g;
}

Graph make_complete(int k) {
  if (k < 0) throw std::invalid_argument("complete graph: negative order");
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph make_empty(int k) {
  if (k < 0) throw std::invalid_argument("empty graph: negative order");
  return Graph(k);
}

Graph make_star(int k) {
  if (k < 1) throw std::invalid_argument("star: order must be >= 1");
  Graph g(k);
  for (int v = 1; v < k; ++v) g.add_edge(0, v);
  return g;
}

Graph make_path(int k) {
  if (k < 0) throw std::invalid_argument("path: negative order");
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle: order must be >= 3");
  Graph g(k);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

Graph make_matching(int t) {
  if (t < 0) throw std::invalid_argument("matching: negative size");
  Graph g(2 * t);
  for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph make_turan(int n, int r) {
  if (r < 1) throw std::invalid_argument("turan graph: parts must be >= 1");
  if (n < 0) throw std::invalid_argument("turan graph: negative order");
  // Part p occupies a contiguous index block; the first n mod r parts are the
  // larger ones (ceil(n/r) vertices each).
  std::vector<int> part_of(n);
  int big = n % r, small_size = n / r, idx = 0;
  for (int p = 0; p < r && idx < n; ++p) {
    int size = small_size + (p < big ? 1 : 0);
    for (int i = 0; i < size; ++i) part_of[idx++] = p;
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph make_complete_bipartite(int s, int t) {
  if (s < 0 || t < 0)
    throw std::invalid_argument("complete bipartite: negative part size");
  Graph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = s; v < s + t; ++v) g.add_edge(u, v);
  return g;
}

Graph make_wheel(int k) {
  if (k < 2) throw std::invalid_argument("wheel: k must be >= 2");
  return join(make_complete(1), make_cycle(2 * k));
}

Graph make_fan(int k) {
  if (k < 1) throw std::invalid_argument("fan: k must be >= 1");
  return join(make_complete(1), make_path(k + 1));
}

Graph make_book(int k) {
  if (k < 1) throw std::invalid_argument("book: k must be >= 1");
  return join(make_complete(1), make_star(k + 1));
}

Graph make_friendship(int k) {
  if (k < 1) throw std::invalid_argument("friendship: k must be >= 1");
  return join(make_complete(1), make_matching(k));
}

Graph join(const Graph& f, const Graph& h) {
  int nf = f.order(), nh = h.order();
  Graph g(nf + nh);
  for (auto [u, v] : f.edge_list()) g.add_edge(u, v);
  for (auto [u, v] : h.edge_list()) g.add_edge(nf + u, nf + v);
  for (int u = 0; u < nf; ++u)
    for (int v = 0; v < nh; ++v) g.add_edge(u, nf + v);
  return g;
}

Graph disjoint_union(const Graph& f, const Graph& h) {
  int nf = f.order();
  Graph g(nf + h.order());
  for (auto [u, v] : f.edge_list()) g.add_edge(u, v);
  for (auto [u, v] : h.edge_list()) g.add_edge(nf + u, nf + v);
  return g;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph strip_isolated(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  std::vector<int> new_index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (auto [u, v] : g.edge_list()) out.add_edge(new_index[u], new_index[v]);
  return out;
}

}  // namespace turan

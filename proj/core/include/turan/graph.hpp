#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace turan {

/// Simple undirected graph on a fixed vertex set {0, ..., n-1}.
///
/// Adjacency is stored as one fixed-width bit row per vertex, which makes
/// neighbourhood intersection (the inner loop of every search in this
/// library) a handful of word operations. Vertices may be isolated; loops
/// and parallel edges do not exist. Instances are cheap to copy and are
/// treated as immutable values once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 512;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  long long size() const { return m_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) &
           1u;
  }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> degree_sequence() const;  // sorted descending
  std::vector<int> neighbors(int v) const;

  /// Bit row of vertex v; bit u set iff u~v. Row width is row_words() words.
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  int row_words() const { return words_; }

  std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted

  /// Relabelled copy: vertex v of *this becomes new_label[v].
  Graph permuted(std::span<const int> new_label) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Named constructors. Vertex layouts are fixed so that outputs are
// byte-for-byte reproducible: stars have centre 0, paths and cycles are
// numbered along the walk, matching edge i is (2i, 2i+1), Turan parts are
// contiguous index blocks with the n mod r larger parts first.
Graph make_complete(int k);
Graph make_empty(int k);
Graph make_star(int k);      // k vertices, centre 0
Graph make_path(int k);      // k vertices
Graph make_cycle(int k);     // k >= 3
Graph make_matching(int t);  // t disjoint edges, 2t vertices
Graph make_turan(int n, int r);
Graph make_complete_bipartite(int s, int t);

// Apex families: an extra vertex joined to everything in the base graph.
Graph make_wheel(int k);       // K_1 joined to C_{2k}, k >= 2
Graph make_fan(int k);         // K_1 joined to P_{k+1}
Graph make_book(int k);        // K_1 joined to S_{k+1}
Graph make_friendship(int k);  // K_1 joined to M_k

Graph join(const Graph& f, const Graph& h);
Graph disjoint_union(const Graph& f, const Graph& h);

bool is_bipartite(const Graph& g);
/// Two-colouring (0/1 per vertex) if bipartite, nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

/// Copy with all isolated vertices removed (indices compacted, order kept).
Graph strip_isolated(const Graph& g);

}  // namespace turan

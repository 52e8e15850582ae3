#include "turan/graph6.hpp"

#include <stdexcept>

namespace turan {

namespace {

constexpr int kBias = 63;
constexpr long long kLongFormLimit = 258047;  // largest n in the 3-byte form

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("graph6: " + what);
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with("\n")) text.remove_suffix(1);
  if (text.empty()) malformed("empty input");
  if (text[0] == ':') malformed("sparse6 input is not supported");
  if (text[0] == '&') malformed("digraph6 input is not supported");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) malformed("truncated input");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) malformed("byte out of printable range");
    return c - kBias;
  };

  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    if (pos < text.size() && text[pos] == '~')
      malformed("graphs beyond n=258047 are not supported");
    long long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
    if (n <= 62) malformed("long size header used for small graph");
  }
  if (n > kLongFormLimit) malformed("size header out of range");
  if (n > Graph::kMaxVertices)
    malformed("graph order exceeds the supported maximum of " +
              std::to_string(Graph::kMaxVertices));

  Graph g(static_cast<int>(n));
  int group = 0, remaining = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (remaining == 0) {
        group = next();
        remaining = 6;
      }
      if ((group >> (remaining - 1)) & 1) g.add_edge(u, v);
      --remaining;
    }
  }
  if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0)
    malformed("nonzero padding bits");
  if (pos != text.size()) malformed("trailing bytes after graph");
  return g;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    while (line.ends_with("\r") || line.ends_with(" ")) line.remove_suffix(1);
    if (!line.empty() && line[0] != '#') out.push_back(decode_graph6(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.order(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edge_list())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace turan

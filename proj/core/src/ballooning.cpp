#include "turan/ballooning.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "turan/graph6.hpp"

namespace turan {

namespace {

std::pair<int, int> sorted_edge(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

BalloonSpec BalloonSpec::uniform(const Graph& skeleton, int length) {
  BalloonSpec spec{skeleton, {}};
  for (auto e : skeleton.edge_list()) spec.lengths[e] = length;
  spec.validate();
  return spec;
}

bool BalloonSpec::lengths_at_least_five() const {
  return std::all_of(lengths.begin(), lengths.end(),
                     [](const auto& kv) { return kv.second >= 5; });
}

void BalloonSpec::validate() const {
  auto edges = skeleton.edge_list();
  if (lengths.size() != edges.size())
    throw std::invalid_argument(
        "balloon spec: every skeleton edge needs exactly one length");
  for (auto e : edges) {
    auto it = lengths.find(e);
    if (it == lengths.end())
      throw std::invalid_argument("balloon spec: missing length for edge " +
                                  std::to_string(e.first) + "," +
                                  std::to_string(e.second));
    int len = it->second;
    if (len < 3 || len % 2 == 0)
      throw std::invalid_argument(
          "balloon spec: cycle lengths must be odd and >= 3, got " +
          std::to_string(len));
  }
}

BalloonResult odd_balloon(const BalloonSpec& spec) {
  spec.validate();
  auto [vertices, edge_count] = balloon_sizes(spec);
  if (vertices > Graph::kMaxVertices)
    throw std::invalid_argument("balloon exceeds the supported graph order");
  (void)edge_count;

  Graph out(static_cast<int>(vertices));
  BalloonResult result;
  int next_fresh = spec.skeleton.order();
  for (auto [e, len] : spec.lengths) {
    auto [u, v] = e;
    std::vector<int> cycle{u};
    for (int i = 0; i < len - 2; ++i) cycle.push_back(next_fresh++);
    cycle.push_back(v);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      out.add_edge(cycle[i], cycle[i + 1]);
    out.add_edge(u, v);  // the skeleton edge closes the cycle
    result.cycles.emplace_back(e, std::move(cycle));
  }
  result.graph = std::move(out);
  return result;
}

std::pair<long long, long long> balloon_sizes(const BalloonSpec& spec) {
  spec.validate();
  long long v = spec.skeleton.order(), e = 0;
  for (auto [edge, len] : spec.lengths) {
    v += len - 2;
    e += len;
  }
  return {v, e};
}

std::string format_balloon_spec_text(const BalloonSpec& spec) {
  std::string out = encode_graph6(spec.skeleton);
  for (auto [e, len] : spec.lengths)
    out += " ; edge " + std::to_string(e.first) + "," +
           std::to_string(e.second) + " = " + std::to_string(len);
  return out;
}

std::string format_balloon_spec_json(const BalloonSpec& spec) {
  nlohmann::json j;
  j["skeleton"] = encode_graph6(spec.skeleton);
  j["lengths"] = nlohmann::json::array();
  for (auto [e, len] : spec.lengths)
    j["lengths"].push_back({e.first, e.second, len});
  return j.dump();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

BalloonSpec parse_text_spec(std::string_view input) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find(';', start);
    parts.push_back(trim(input.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (parts.empty() || parts[0].empty())
    throw std::invalid_argument("balloon spec: missing skeleton");
  BalloonSpec spec{decode_graph6(parts[0]), {}};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    int u, v, len;
    if (std::sscanf(parts[i].c_str(), "edge %d ,%d = %d", &u, &v, &len) != 3)
      throw std::invalid_argument("balloon spec: cannot parse '" + parts[i] +
                                  "'");
    spec.lengths[sorted_edge(u, v)] = len;
  }
  spec.validate();
  return spec;
}

BalloonSpec parse_json_spec(std::string_view input) {
  nlohmann::json j = nlohmann::json::parse(input);
  BalloonSpec spec{decode_graph6(j.at("skeleton").get<std::string>()), {}};
  if (j.contains("lengths")) {
    for (const auto& entry : j.at("lengths")) {
      int u = entry.at(0).get<int>();
      int v = entry.at(1).get<int>();
      int len = entry.at(2).get<int>();
      spec.lengths[sorted_edge(u, v)] = len;
    }
  } else if (j.contains("length")) {
    spec = BalloonSpec::uniform(spec.skeleton, j.at("length").get<int>());
  }
  spec.validate();
  return spec;
}

}  // namespace

BalloonSpec parse_balloon_spec(std::string_view input) {
  std::string trimmed = trim(input);
  if (!trimmed.empty() && trimmed[0] == '{') return parse_json_spec(trimmed);
  return parse_text_spec(trimmed);
}

}  // namespace turan

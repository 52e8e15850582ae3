#include "turan/formulas.hpp"

#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "turan/graph6.hpp"

namespace turan {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

long long turan_edges(long long n, long long r) {
  if (n < 0 || r < 1)
    throw std::invalid_argument("turan_edges: need n >= 0 and r >= 1");
  long long small = n / r, big = n % r;
  // Total pairs minus pairs inside parts: big parts have small+1 vertices.
  long long inside = big * (small + 1) * small / 2 +
                     (r - big) * small * (small - 1) / 2;
  return n * (n - 1) / 2 - inside;
}

long long f_chvatal_hanson(long long n, long long nu, long long delta) {
  if (nu < 1 || delta < 1)
    throw std::invalid_argument("f: need nu >= 1 and delta >= 1");
  if (n < 2 * nu + 1)
    throw std::invalid_argument("f: requires n >= 2*nu + 1");
  delta = std::min(delta, n - 1);  // larger caps constrain nothing
  if (delta <= 2 * nu) {
    long long window = 2 * nu + nu / ((delta + 1) / 2);
    if (n <= window) {
      if (delta % 2 == 1)
        return std::min(n * delta / 2,
                        nu * delta +
                            (delta - 1) / 2 * (2 * (n - nu) / (delta + 3)));
      return n * delta / 2;
    }
    return nu * delta + (nu / ((delta + 1) / 2)) * (delta / 2);
  }
  if (n <= nu + delta)
    return std::max((2 * nu + 1) * nu, nu * (n + delta - nu) / 2);
  return nu * delta;
}

long long f_limit(long long nu, long long delta) {
  if (nu < 1 || delta < 1)
    throw std::invalid_argument("f_limit: need nu >= 1 and delta >= 1");
  if (delta <= 2 * nu)
    return nu * delta + (nu / ((delta + 1) / 2)) * (delta / 2);
  return nu * delta;
}

long long h_edges(long long n, long long k, int i) {
  if (k < 1 || (i != 1 && i != 2))
    throw std::invalid_argument("h_edges: need k >= 1 and i in {1,2}");
  if (n < 2 * k + 1)
    throw std::invalid_argument("h_edges: requires n >= 2k + 1");
  long long rest = n - 2 * k + 1;
  return (k - 1) + (2 * k - 1) * rest + turan_edges(rest, i);
}

BaseClass classify_base(const Graph& base) {
  if (base.order() == 0 || base.size() == 0)
    throw std::invalid_argument("base graph must have at least one edge");
  bool all_cycles = true, all_edges = true;
  for (const auto& comp : connected_components(base)) {
    long long edges = 0;
    bool two_regular = true;
    for (int v : comp) {
      int d = base.degree(v);
      edges += d;
      if (d != 2) two_regular = false;
    }
    edges /= 2;
    long long size = static_cast<long long>(comp.size());
    bool tree = edges == size - 1 && size >= 2;
    bool even_cycle = two_regular && edges == size && size >= 4 && size % 2 == 0;
    if (!tree && !even_cycle)
      throw std::invalid_argument(
          "base graph component is neither a non-trivial tree nor an even "
          "cycle");
    if (!even_cycle) all_cycles = false;
    if (!(tree && size == 2)) all_edges = false;
  }
  if (all_cycles) return BaseClass::even_cycles;
  if (all_edges) return BaseClass::single_edges;
  return BaseClass::general_trees;
}

std::string_view to_string(TuranCase c) {
  switch (c) {
    case TuranCase::all_even_cycles: return "AllEvenCycles";
    case TuranCase::all_single_edges: return "AllSingleEdges";
    case TuranCase::mixed_trees: return "MixedTrees";
    case TuranCase::chi_at_least_4: return "ChiAtLeast4";
  }
  return "?";
}

namespace {

TuranCase from_case_string(std::string_view s) {
  if (s == "AllEvenCycles") return TuranCase::all_even_cycles;
  if (s == "AllSingleEdges") return TuranCase::all_single_edges;
  if (s == "MixedTrees") return TuranCase::mixed_trees;
  if (s == "ChiAtLeast4") return TuranCase::chi_at_least_4;
  throw std::invalid_argument("unknown prediction case: " + std::string(s));
}

long long default_trust_threshold(const Graph& base) {
  long long b = base.order();
  return 50 * b * b;
}

std::string apex_descriptor(const Graph& apex, long long n, int parts) {
  return "(" + encode_graph6(apex) + ") * T(" +
         std::to_string(n - apex.order()) + "," + std::to_string(parts) + ")";
}

long long apex_join_edges(const Graph& apex, long long n, int parts) {
  long long a = apex.order();
  if (n < a)
    throw std::invalid_argument("construction needs n >= apex order");
  return apex.size() + a * (n - a) + turan_edges(n - a, parts);
}

}  // namespace

TuranPrediction predict_ex_balloon(const Graph& base, long long n,
                                   bool lengths_at_least_five,
                                   long long trusted_n) {
  if (!lengths_at_least_five)
    throw std::invalid_argument(
        "prediction requires every substituted cycle length >= 5; the "
        "length-3 regime has a different extremal count");
  BaseClass cls = classify_base(base);
  if (n < base.order() + 1)
    throw std::invalid_argument("prediction requires n >= |base| + 1");

  TuranPrediction p;
  p.n = n;
  p.parts = 2;
  if (trusted_n <= 0) trusted_n = default_trust_threshold(base);
  p.conjectural = n < trusted_n;
  long long e = base.size();
  switch (cls) {
    case BaseClass::even_cycles: {
      long long k = base.order() / 2;
      p.case_tag = TuranCase::all_even_cycles;
      p.apex = disjoint_union(make_matching(static_cast<int>(k) - 1),
                              make_complete(1));
      p.edge_count = h_edges(n, k, 2);
      break;
    }
    case BaseClass::single_edges:
      p.case_tag = TuranCase::all_single_edges;
      p.apex = make_complete(static_cast<int>(e));
      p.edge_count = apex_join_edges(*p.apex, n, 2);
      break;
    case BaseClass::general_trees:
      p.case_tag = TuranCase::mixed_trees;
      p.apex = make_empty(static_cast<int>(e));
      p.edge_count = apex_join_edges(*p.apex, n, 2);
      break;
  }
  p.construction = apex_descriptor(*p.apex, n, 2);
  return p;
}

TuranPrediction predict_ex_decomposition(const Graph& base, long long n,
                                         long long trusted_n) {
  BaseClass cls = classify_base(base);
  if (n < base.order() + 1)
    throw std::invalid_argument("prediction requires n >= |base| + 1");

  TuranPrediction p;
  p.n = n;
  p.parts = 1;
  if (trusted_n <= 0) trusted_n = default_trust_threshold(base);
  p.conjectural = n < trusted_n;
  long long e = base.size();
  switch (cls) {
    case BaseClass::even_cycles: {
      long long k = base.order() / 2;
      p.case_tag = TuranCase::all_even_cycles;
      p.apex = disjoint_union(make_matching(static_cast<int>(k) - 1),
                              make_complete(1));
      p.edge_count = h_edges(n, k, 1);
      break;
    }
    case BaseClass::single_edges:
      p.case_tag = TuranCase::all_single_edges;
      p.apex = make_complete(static_cast<int>(e));
      p.edge_count = apex_join_edges(*p.apex, n, 1);
      break;
    case BaseClass::general_trees:
      // K_{e, n-e} is the apex-join of e independent vertices with one part.
      p.case_tag = TuranCase::mixed_trees;
      p.apex = make_empty(static_cast<int>(e));
      p.edge_count = apex_join_edges(*p.apex, n, 1);
      break;
  }
  p.construction = apex_descriptor(*p.apex, n, 1);
  return p;
}

TuranPrediction predict_chi4(long long n) {
  TuranPrediction p;
  p.case_tag = TuranCase::chi_at_least_4;
  p.n = n;
  p.parts = 0;
  p.construction =
      "extremal graphs of the ballooning equal those of the skeleton";
  return p;
}

Rational erdos_stone_asymptotic(long long n, long long chi) {
  if (chi < 2) throw std::invalid_argument("erdos_stone: need chi >= 2");
  // (1 - 1/(chi-1)) * n(n-1)/2
  return Rational((chi - 2) * n * (n - 1), 2 * (chi - 1));
}

std::string TuranPrediction::to_json() const {
  nlohmann::json j;
  j["case"] = std::string(to_string(case_tag));
  j["n"] = n;
  j["parts"] = parts;
  j["construction"] = construction;
  j["conjectural"] = conjectural;
  if (apex) j["apex"] = encode_graph6(*apex);
  if (edge_count) j["edge_count"] = *edge_count;
  return j.dump();
}

TuranPrediction TuranPrediction::from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TuranPrediction p;
  p.case_tag = from_case_string(j.at("case").get<std::string>());
  p.n = j.at("n").get<long long>();
  p.parts = j.at("parts").get<int>();
  p.construction = j.at("construction").get<std::string>();
  p.conjectural = j.at("conjectural").get<bool>();
  if (j.contains("apex")) p.apex = decode_graph6(j.at("apex").get<std::string>());
  if (j.contains("edge_count")) p.edge_count = j.at("edge_count").get<long long>();
  return p;
}

}  // namespace turan

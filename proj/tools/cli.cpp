#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/ballooning.hpp"
#include "turan/constructions.hpp"
#include "turan/cracking.hpp"
#include "turan/decomposition.hpp"
#include "turan/extremal_search.hpp"
#include "turan/formulas.hpp"
#include "turan/graph6.hpp"
#include "turan/invariants.hpp"
#include "turan/subgraph.hpp"
#include "turan/verification.hpp"

namespace turan::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TURAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 100'000'000;
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

/// Named one-apex skeleton families; returns the base graph (the part the
/// apex is joined to).
Graph named_base(const std::string& family, int k) {
  if (family == "wheel") return make_cycle(2 * k);
  if (family == "fan") return make_path(k + 1);
  if (family == "book") return make_star(k + 1);
  if (family == "friendship") return make_matching(k);
  throw std::invalid_argument("unknown family: " + family);
}

std::string to_hex(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

nlohmann::json family_report(const GraphFamily& family) {
  auto arr = nlohmann::json::array();
  for (const auto& [form, member] : family) {
    nlohmann::json e;
    e["graph6"] = encode_graph6(member);
    e["canonical_form"] = to_hex(form.bytes);
    e["vertices"] = member.order();
    e["edges"] = member.size();
    bool bip = is_bipartite(member);
    e["bipartite"] = bip;
    if (bip) e["q"] = independent_covering_number(member);
    arr.push_back(e);
  }
  return arr;
}

struct GenSettings {
  std::vector<std::string> args;
  bool dot = false;
};

int run_gen(const GenSettings& s, std::ostream& out) {
  if (s.args.empty()) throw std::invalid_argument("gen: missing kind");
  const std::string& kind = s.args[0];
  auto param = [&](std::size_t i) {
    if (i >= s.args.size())
      throw std::invalid_argument("gen " + kind + ": missing parameter");
    return std::stoi(s.args[i]);
  };
  Graph g;
  if (kind == "complete") g = make_complete(param(1));
  else if (kind == "empty") g = make_empty(param(1));
  else if (kind == "star") g = make_star(param(1));
  else if (kind == "path") g = make_path(param(1));
  else if (kind == "cycle") g = make_cycle(param(1));
  else if (kind == "matching") g = make_matching(param(1));
  else if (kind == "turan") g = make_turan(param(1), param(2));
  else if (kind == "bipartite") g = make_complete_bipartite(param(1), param(2));
  else if (kind == "wheel") g = make_wheel(param(1));
  else if (kind == "fan") g = make_fan(param(1));
  else if (kind == "book") g = make_book(param(1));
  else if (kind == "friendship") g = make_friendship(param(1));
  else throw std::invalid_argument("gen: unknown kind '" + kind + "'");
  out << encode_graph6(g) << "\n";
  if (s.dot) out << to_dot(g);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Turan-type combinatorics for odd balloonings"};
  app.require_subcommand(1);

  // gen
  GenSettings gen;
  auto* gen_cmd = app.add_subcommand(
      "gen", "emit a named graph as graph6 (complete, empty, star, path, "
             "cycle, matching, turan, bipartite, wheel, fan, book, "
             "friendship)");
  gen_cmd->add_option("params", gen.args, "kind and integer parameters")
      ->expected(-1);
  gen_cmd->add_flag("--dot", gen.dot, "also emit DOT");

  // balloon
  std::string balloon_skeleton, balloon_spec_file, balloon_family;
  int balloon_k = 0, balloon_length = 0;
  bool balloon_json = false, balloon_dot = false;
  auto* balloon_cmd = app.add_subcommand(
      "balloon", "replace every skeleton edge by an odd cycle");
  balloon_cmd->add_option("--skeleton", balloon_skeleton, "skeleton graph6");
  balloon_cmd->add_option("--spec", balloon_spec_file,
                          "spec file (text or JSON form)");
  balloon_cmd->add_option("--family", balloon_family,
                          "named skeleton: wheel|fan|book|friendship");
  balloon_cmd->add_option("-k,--k", balloon_k, "family parameter");
  balloon_cmd->add_option("--length", balloon_length,
                          "uniform odd cycle length");
  balloon_cmd->add_flag("--json", balloon_json, "emit a JSON report");
  balloon_cmd->add_flag("--dot", balloon_dot, "also emit DOT");

  // crack
  std::string crack_graph, crack_u;
  bool crack_json = false;
  auto* crack_cmd = app.add_subcommand(
      "crack", "emit every cracking of the graph over the given "
               "independent set (graph6 lines)");
  crack_cmd->add_option("--graph", crack_graph, "graph6")->required();
  crack_cmd->add_option("--u", crack_u, "comma-separated vertex list")
      ->required();
  crack_cmd->add_flag("--json", crack_json, "emit a JSON report");

  // crack-all
  std::string crack_all_graph;
  bool crack_all_json = false;
  auto* crack_all_cmd = app.add_subcommand(
      "crack-all",
      "emit the full cracking family over all independent sets");
  crack_all_cmd->add_option("--graph", crack_all_graph, "graph6")->required();
  crack_all_cmd->add_flag("--json", crack_all_json, "emit a JSON report");

  // decompose
  std::string decompose_fo;
  int decompose_r = 2, decompose_tmax = 0, decompose_cap = 8;
  std::uint64_t decompose_budget = default_budget();
  bool decompose_json = false;
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "brute-force decomposition family of a graph");
  decompose_cmd->add_option("--fo", decompose_fo, "target graph6")
      ->required();
  decompose_cmd->add_option("--r", decompose_r, "chromatic number minus one");
  decompose_cmd->add_option("--t-max", decompose_tmax,
                            "largest padding size to scan");
  decompose_cmd->add_option("--size-cap", decompose_cap,
                            "largest candidate order");
  decompose_cmd->add_option("--budget", decompose_budget,
                            "node budget per embedding test");
  decompose_cmd->add_flag("--json", decompose_json, "emit a JSON report");

  // predict
  std::string predict_fbullet, predict_family;
  int predict_k = 0;
  long long predict_n = 0, predict_trusted = 0;
  std::string predict_mode = "balloon";
  auto* predict_cmd = app.add_subcommand(
      "predict", "closed-form extremal count prediction");
  predict_cmd->add_option("--fbullet", predict_fbullet,
                          "base graph (graph6); the target skeleton is K_1 "
                          "joined with it");
  predict_cmd->add_option("--family", predict_family,
                          "named skeleton: wheel|fan|book|friendship");
  predict_cmd->add_option("-k,--k", predict_k, "family parameter");
  predict_cmd->add_option("--n", predict_n, "host order")->required();
  predict_cmd
      ->add_option("--mode", predict_mode,
                   "balloon | decomposition | chi4")
      ->check(CLI::IsMember({"balloon", "decomposition", "chi4"}));
  predict_cmd->add_option("--trusted-n", predict_trusted,
                          "label predictions below this n as conjectural "
                          "(default 50*|base|^2)");

  // check-free
  std::string cf_host, cf_family_file;
  std::uint64_t cf_budget = default_budget();
  int cf_threads = 1;
  auto* cf_cmd = app.add_subcommand(
      "check-free", "certify a host graph against a family file");
  cf_cmd->add_option("--host", cf_host, "host graph6")->required();
  cf_cmd->add_option("--family", cf_family_file,
                     "file with one graph6 per line")
      ->required();
  cf_cmd->add_option("--budget", cf_budget, "node budget per member");
  cf_cmd->add_option("--threads", cf_threads, "worker threads");

  // search-ex
  int se_n = 0, se_threads = 1;
  std::string se_forbid_file;
  bool se_witnesses = false, se_ack = false;
  std::uint64_t se_budget = 0;
  auto* se_cmd = app.add_subcommand(
      "search-ex", "exact extremal edge count by exhaustive search");
  se_cmd->add_option("--n", se_n, "vertex count")->required();
  se_cmd->add_option("--forbid", se_forbid_file,
                     "file with one forbidden graph6 per line")
      ->required();
  se_cmd->add_flag("--witnesses", se_witnesses, "emit extremal graphs");
  se_cmd->add_option("--budget", se_budget, "children budget (0 = unlimited)");
  se_cmd->add_option("--threads", se_threads, "worker threads");
  se_cmd->add_flag("--i-understand", se_ack,
                   "acknowledge the cost of n > 10");

  // f-oracle
  int fo_n = 0, fo_nu = 0, fo_delta = 0, fo_threads = 1;
  auto* fo_cmd = app.add_subcommand(
      "f-oracle", "exact max edges under matching and degree caps");
  fo_cmd->add_option("--n", fo_n, "vertex count")->required();
  fo_cmd->add_option("--nu", fo_nu, "matching number cap")->required();
  fo_cmd->add_option("--delta", fo_delta, "max degree cap")->required();
  fo_cmd->add_option("--threads", fo_threads, "worker threads");

  // verify
  std::string verify_json_path;
  bool verify_strict = false;
  int verify_threads = 1;
  std::uint64_t verify_budget = default_budget();
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the full self-contained verification battery");
  verify_cmd->add_option("--json", verify_json_path,
                         "write the JSON report to this path");
  verify_cmd->add_flag("--strict", verify_strict,
                       "treat indeterminate results as failures");
  verify_cmd->add_option("--threads", verify_threads, "worker threads");
  verify_cmd->add_option("--budget", verify_budget,
                         "freeness node budget per member");

  std::vector<const char*> argv;
  argv.push_back("turan");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);

    if (balloon_cmd->parsed()) {
      BalloonSpec spec;
      if (!balloon_spec_file.empty()) {
        spec = parse_balloon_spec(read_file(balloon_spec_file));
      } else {
        Graph skeleton;
        if (!balloon_family.empty())
          skeleton = join(make_complete(1),
                          named_base(balloon_family, balloon_k));
        else if (!balloon_skeleton.empty())
          skeleton = decode_graph6(balloon_skeleton);
        else
          throw std::invalid_argument(
              "balloon: need --skeleton, --family, or --spec");
        if (balloon_length == 0)
          throw std::invalid_argument("balloon: need --length");
        spec = BalloonSpec::uniform(skeleton, balloon_length);
      }
      auto result = odd_balloon(spec);
      out << encode_graph6(result.graph) << "\n";
      if (balloon_json) {
        nlohmann::json j;
        j["graph6"] = encode_graph6(result.graph);
        j["vertices"] = result.graph.order();
        j["edges"] = result.graph.size();
        j["spec"] = nlohmann::json::parse(format_balloon_spec_json(spec));
        auto cycles = nlohmann::json::array();
        for (const auto& [edge, verts] : result.cycles)
          cycles.push_back({{"edge", {edge.first, edge.second}},
                            {"cycle", verts}});
        j["cycles"] = cycles;
        out << j.dump(2) << "\n";
      }
      if (balloon_dot) out << to_dot(result.graph);
      return 0;
    }

    if (crack_cmd->parsed()) {
      Graph f = decode_graph6(crack_graph);
      auto family = crack_family(f, parse_vertex_list(crack_u));
      for (const auto& [form, member] : family)
        out << encode_graph6(member) << "\n";
      if (crack_json) out << family_report(family).dump(2) << "\n";
      return 0;
    }

    if (crack_all_cmd->parsed()) {
      Graph f = decode_graph6(crack_all_graph);
      auto family = cracking_family(f);
      for (const auto& [form, member] : family)
        out << encode_graph6(member) << "\n";
      if (crack_all_json) out << family_report(family).dump(2) << "\n";
      return 0;
    }

    if (decompose_cmd->parsed()) {
      DecompositionOptions options;
      options.r = decompose_r;
      options.t_max = decompose_tmax;
      options.size_cap = decompose_cap;
      options.embed_budget = decompose_budget;
      auto result = decomposition_family_bruteforce(
          decode_graph6(decompose_fo), options);
      for (const auto& [form, member] : result.members)
        out << encode_graph6(member) << "\n";
      if (decompose_json) {
        nlohmann::json j;
        j["members"] = family_report(result.members);
        j["complete"] = result.complete;
        j["members_at_size_cap"] = result.members_at_cap;
        j["embed_nodes"] = result.embed_nodes;
        auto ind = nlohmann::json::array();
        for (const auto& g : result.indeterminate_candidates)
          ind.push_back(encode_graph6(g));
        j["indeterminate_candidates"] = ind;
        out << j.dump(2) << "\n";
      }
      if (!result.complete) {
        err << "warning: some embedding tests exhausted their budget; the "
               "family may be incomplete\n";
        return 1;
      }
      return 0;
    }

    if (predict_cmd->parsed()) {
      TuranPrediction prediction;
      if (predict_mode == "chi4") {
        // The symbolic reduction assumes a skeleton with chromatic number
        // at least four; warn when the supplied base contradicts that.
        if (!predict_fbullet.empty() || !predict_family.empty()) {
          Graph base = !predict_family.empty()
                           ? named_base(predict_family, predict_k)
                           : decode_graph6(predict_fbullet);
          Graph skeleton = join(make_complete(1), base);
          if (skeleton.order() <= 32 && chromatic_number(skeleton) < 4)
            err << "warning: the skeleton has chromatic number "
                << chromatic_number(skeleton)
                << "; the symbolic reduction assumes at least 4\n";
        }
        prediction = predict_chi4(predict_n);
      } else {
        Graph base;
        if (!predict_family.empty())
          base = named_base(predict_family, predict_k);
        else if (!predict_fbullet.empty())
          base = decode_graph6(predict_fbullet);
        else
          throw std::invalid_argument("predict: need --fbullet or --family");
        prediction = predict_mode == "balloon"
                         ? predict_ex_balloon(base, predict_n, true,
                                              predict_trusted)
                         : predict_ex_decomposition(base, predict_n,
                                                    predict_trusted);
      }
      out << prediction.to_json() << "\n";
      return 0;
    }

    if (cf_cmd->parsed()) {
      Graph host = decode_graph6(cf_host);
      GraphFamily family;
      for (const auto& g : read_graph6_lines(read_file(cf_family_file)))
        family.insert(g);
      auto cert = certify_free(host, family, cf_budget, cf_threads,
                               cf_host, cf_family_file);
      out << cert.to_json() << "\n";
      return cert.verdict == FreenessVerdict::indeterminate ? 1 : 0;
    }

    if (se_cmd->parsed()) {
      SearchJob job;
      job.n = se_n;
      for (const auto& g : read_graph6_lines(read_file(se_forbid_file)))
        job.forbidden.insert(g);
      job.collect_witnesses = se_witnesses;
      job.node_budget = se_budget;
      job.threads = se_threads;
      job.override_guardrail = se_ack;
      auto result = exact_ex(job);
      nlohmann::json j;
      j["optimum"] = result.optimum;
      j["exhaustive"] = result.exhaustive;
      j["nodes_explored"] = result.nodes_explored;
      j["witness_count"] = result.witnesses.size();
      out << j.dump() << "\n";
      for (const auto& [form, member] : result.witnesses)
        out << encode_graph6(member) << "\n";
      return 0;
    }

    if (fo_cmd->parsed()) {
      auto result = f_oracle(fo_n, fo_nu, fo_delta, fo_threads);
      nlohmann::json j;
      j["optimum"] = result.optimum;
      j["exhaustive"] = result.exhaustive;
      j["nodes_explored"] = result.nodes_explored;
      out << j.dump() << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.threads = verify_threads;
      options.freeness_budget = verify_budget;
      options.progress = &out;
      auto report = run_verification_battery(options);
      out << report.to_text();
      if (!verify_json_path.empty()) {
        std::ofstream json_out(verify_json_path);
        json_out << report.to_json() << "\n";
      }
      std::string overall = report.overall();
      if (overall == "pass") return 0;
      if (overall == "indeterminate" && !verify_strict) return 0;
      return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace turan::cli

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"

using namespace turan;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/turan_cli_test_XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("gen emits graph6 that round-trips") {
  auto turan = run({"gen", "turan", "7", "3"});
  CHECK(turan.status == 0);
  Graph g = decode_graph6(first_line(turan.out));
  CHECK(g.order() == 7);
  CHECK(g.size() == 16);

  CHECK(first_line(run({"gen", "complete", "4"}).out) == "C~");
  CHECK(first_line(run({"gen", "cycle", "5"}).out) == "Dhc");

  auto wheel = run({"gen", "wheel", "2"});
  CHECK(decode_graph6(first_line(wheel.out)).size() == 8);

  auto dot = run({"gen", "path", "3", "--dot"});
  CHECK(dot.out.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("gen rejects bad parameters with a diagnostic") {
  auto bad = run({"gen", "cycle", "2"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("cycle") != std::string::npos);
  CHECK(run({"gen", "nonsense", "3"}).status == 2);
  CHECK(run({"nonsense"}).status == 2);
}

TEST_CASE("balloon subcommand") {
  auto out = run({"balloon", "--skeleton", "Bw", "--length", "5"});
  CHECK(out.status == 0);
  Graph g = decode_graph6(first_line(out.out));
  CHECK(g.order() == 12);
  CHECK(g.size() == 15);

  // The friendship skeleton K_1 * M_2 has 5 vertices and 6 edges; every
  // edge becomes a triangle, adding one fresh vertex each.
  auto viaFamily =
      run({"balloon", "--family", "friendship", "-k", "2", "--length", "3"});
  CHECK(viaFamily.status == 0);
  CHECK(decode_graph6(first_line(viaFamily.out)).order() == 11);

  auto even = run({"balloon", "--skeleton", "Bw", "--length", "4"});
  CHECK(even.status == 2);

  auto json = run({"balloon", "--skeleton", "A_", "--length", "5", "--json"});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"cycles\"") != std::string::npos);
}

TEST_CASE("balloon consumes spec files in both formats") {
  TempFile text("A_ ; edge 0,1 = 7");
  auto from_text = run({"balloon", "--spec", text.path});
  CHECK(from_text.status == 0);
  CHECK(decode_graph6(first_line(from_text.out)).order() == 7);

  TempFile json("{\"skeleton\": \"A_\", \"lengths\": [[0, 1, 9]]}");
  auto from_json = run({"balloon", "--spec", json.path});
  CHECK(from_json.status == 0);
  CHECK(decode_graph6(first_line(from_json.out)).order() == 9);
}

TEST_CASE("crack subcommands emit families") {
  auto family = run({"crack", "--graph", "Bw", "--u", "0"});
  CHECK(family.status == 0);
  CHECK(read_graph6_lines(family.out).size() == 3);

  auto all = run({"crack-all", "--graph", "Bw", "--json"});
  CHECK(all.status == 0);
  CHECK(read_graph6_lines(all.out.substr(0, all.out.find('['))).size() == 4);
  auto json_start = all.out.find('[');
  auto parsed = nlohmann::json::parse(all.out.substr(json_start));
  CHECK(parsed.size() == 4);
  int bipartite = 0;
  for (const auto& member : parsed) {
    CHECK(member["edges"] == 3);
    if (member["bipartite"].get<bool>()) {
      ++bipartite;
      CHECK(member.contains("q"));
    }
  }
  CHECK(bipartite == 3);  // all but the triangle itself

  auto dependent = run({"crack", "--graph", "Bw", "--u", "0,1"});
  CHECK(dependent.status == 2);
}

TEST_CASE("decompose subcommand") {
  auto balloon = run({"balloon", "--skeleton", "A_", "--length", "5"});
  auto result = run({"decompose", "--fo", first_line(balloon.out), "--t-max",
                     "6", "--size-cap", "4"});
  CHECK(result.status == 0);
  auto members = read_graph6_lines(result.out);
  CHECK(members.size() == 1);
  CHECK(members[0] == make_complete(2));

  auto bipartite = run({"decompose", "--fo", "Cr", "--size-cap", "4"});
  CHECK(bipartite.status == 2);
}

TEST_CASE("predict subcommand") {
  auto p = run({"predict", "--fbullet", "Cl", "--n", "20", "--mode",
                "balloon"});
  CHECK(p.status == 0);
  auto parsed = nlohmann::json::parse(p.out);
  CHECK(parsed["case"] == "AllEvenCycles");
  CHECK(parsed["edge_count"] == 124);
  CHECK(parsed["conjectural"] == true);

  auto via_family = run({"predict", "--family", "wheel", "-k", "2", "--n",
                         "20", "--mode", "balloon"});
  CHECK(nlohmann::json::parse(via_family.out)["edge_count"] == 124);

  auto decomposition = run({"predict", "--family", "friendship", "-k", "2",
                            "--n", "30", "--mode", "decomposition"});
  CHECK(nlohmann::json::parse(decomposition.out)["edge_count"] == 57);

  auto chi4 = run({"predict", "--n", "100", "--mode", "chi4"});
  CHECK(chi4.status == 0);
  CHECK(nlohmann::json::parse(chi4.out)["case"] == "ChiAtLeast4");

  auto invalid = run({"predict", "--fbullet", "Dhc", "--n", "20", "--mode",
                      "balloon"});
  CHECK(invalid.status == 2);  // C_5 base is not a valid component
}

TEST_CASE("check-free subcommand") {
  TempFile family("Dhc\n");  // C_5
  auto cert = run({"check-free", "--host",
                   first_line(run({"gen", "turan", "10", "2"}).out),
                   "--family", family.path});
  CHECK(cert.status == 0);
  auto parsed = nlohmann::json::parse(cert.out);
  CHECK(parsed["verdict"] == "free");

  auto contains = run({"check-free", "--host",
                       first_line(run({"gen", "complete", "6"}).out),
                       "--family", family.path});
  auto parsed_contains = nlohmann::json::parse(contains.out);
  CHECK(parsed_contains["verdict"] == "contains");
  CHECK(parsed_contains["witness_validated"] == true);
}

TEST_CASE("search-ex and f-oracle subcommands") {
  TempFile triangle("Bw\n");
  auto search = run({"search-ex", "--n", "5", "--forbid", triangle.path,
                     "--witnesses"});
  CHECK(search.status == 0);
  auto json_line = first_line(search.out);
  auto parsed = nlohmann::json::parse(json_line);
  CHECK(parsed["optimum"] == 6);
  CHECK(parsed["exhaustive"] == true);
  CHECK(parsed["witness_count"] == 1);
  auto witnesses = read_graph6_lines(search.out.substr(json_line.size()));
  CHECK(witnesses.size() == 1);
  CHECK(witnesses[0].size() == 6);

  auto guarded = run({"search-ex", "--n", "11", "--forbid", triangle.path});
  CHECK(guarded.status == 2);

  auto oracle = run({"f-oracle", "--n", "8", "--nu", "2", "--delta", "5"});
  CHECK(nlohmann::json::parse(oracle.out)["optimum"] == 10);
}

TEST_CASE("subcommands are deterministic") {
  auto first = run({"crack-all", "--graph", "DV{"});
  auto second = run({"crack-all", "--graph", "DV{"});
  CHECK(first.out == second.out);
  TempFile triangle("Bw\n");
  auto s1 = run({"search-ex", "--n", "6", "--forbid", triangle.path,
                 "--threads", "1"});
  auto s4 = run({"search-ex", "--n", "6", "--forbid", triangle.path,
                 "--threads", "4"});
  CHECK(s1.out == s4.out);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"gen", "--help"}).status == 0);
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/family.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/subgraph.hpp"

namespace turan {

/// The graph apex ∇ T_{n-|apex|, parts}.
struct ApexJoinDescriptor {
  Graph apex;
  long long n = 0;
  int parts = 2;
};

Graph build_apex_join(const ApexJoinDescriptor& d);

/// H(n,k,i): (M_{k-1} + K_1) ∇ T_{n-2k+1, i}.
Graph build_h_graph(long long n, long long k, int i);

enum class FreenessVerdict { free, contains, indeterminate };

std::string_view to_string(FreenessVerdict v);

struct MemberOutcome {
  CanonicalForm member;
  EmbedOutcome outcome;
  std::uint64_t nodes = 0;
};

/// Result of checking a host against a forbidden family. A contains verdict
/// always carries a witness that has been revalidated by an independent
/// adjacency check; indeterminate only ever means the node budget ran out.
struct FreenessCertificate {
  std::string host_description;
  std::string family_description;
  FreenessVerdict verdict = FreenessVerdict::indeterminate;
  std::optional<std::vector<int>> witness;
  std::optional<Graph> witness_member;
  bool witness_validated = false;
  std::uint64_t total_nodes = 0;
  std::vector<MemberOutcome> member_outcomes;

  std::string to_json() const;
};

/// Searches every family member in the host. Members run independently
/// (optionally on several threads) with the given per-member node budget;
/// contains dominates indeterminate dominates free.
FreenessCertificate certify_free(const Graph& host, const GraphFamily& family,
                                 std::uint64_t budget_per_member = 0,
                                 int threads = 1,
                                 std::string host_description = {},
                                 std::string family_description = {});

enum class LowerBoundMode { balloon, decomposition };

/// Builds the predicted extremal graph for the target defined by `base`,
/// checks its edge count against the closed form, and certifies freeness
/// against the appropriate family. In balloon mode the apex is additionally
/// checked against the cracking family (the mechanism that makes the
/// construction free), and any disagreement is reported.
struct LowerBoundReport {
  TuranPrediction prediction;
  Graph host;
  long long host_edges = 0;
  bool edge_count_matches = false;
  FreenessCertificate freeness;
  std::optional<FreenessCertificate> apex_family_check;
  bool consistent = false;  // freeness and apex route agree where both apply
  std::string implied_bound;

  std::string to_json() const;
  std::string to_text() const;
};

LowerBoundReport verify_lower_bound(const Graph& base, long long n,
                                    LowerBoundMode mode,
                                    std::uint64_t budget_per_member = 0,
                                    int threads = 1);

}  // namespace turan

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

/// Exact rational, always normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  bool operator==(const Rational&) const = default;
  std::string to_string() const;
};

/// Edge count of the balanced complete r-partite graph on n vertices.
long long turan_edges(long long n, long long r);

/// Largest edge count of an n-vertex graph with matching number <= nu and
/// maximum degree <= delta (exact, case analysis). Requires n >= 2*nu + 1.
/// Degree caps above n - 1 are vacuous and are clamped before the case
/// split.
long long f_chvatal_hanson(long long n, long long nu, long long delta);

/// The stabilized value of f for large n (independent of n once
/// n >= nu + delta + 1).
long long f_limit(long long nu, long long delta);

/// Edge count of (M_{k-1} + K_1) joined with the balanced complete
/// i-partite graph on n - 2k + 1 vertices, i in {1, 2}. Requires
/// n >= 2k + 1.
long long h_edges(long long n, long long k, int i);

/// Component structure of the base graph B in a target family K_1 ∇ B.
/// Valid bases have only non-trivial trees and even cycles as components.
enum class BaseClass { even_cycles, single_edges, general_trees };
BaseClass classify_base(const Graph& base);

enum class TuranCase {
  all_even_cycles,
  all_single_edges,
  mixed_trees,
  chi_at_least_4,
};

std::string_view to_string(TuranCase c);

/// A predicted extremal count and construction: apex ∇ T_{n-|apex|,parts}
/// when numeric, or the symbolic reduction for 4-chromatic targets.
struct TuranPrediction {
  TuranCase case_tag = TuranCase::chi_at_least_4;
  long long n = 0;
  std::optional<Graph> apex;  // absent for the symbolic case
  int parts = 2;
  std::optional<long long> edge_count;  // absent for the symbolic case
  std::string construction;             // human-readable descriptor
  /// Set when n is below the trust threshold: the closed forms hold for
  /// large n, so small-n outputs are conjectural.
  bool conjectural = false;

  std::string to_json() const;
  static TuranPrediction from_json(std::string_view text);
};

/// Predicted extremal count for the family obtained by replacing every edge
/// of K_1 ∇ base with an odd cycle of length >= 5. The caller asserts the
/// length regime via lengths_at_least_five; length-3 regimes are refused
/// because their extremal counts differ. trusted_n <= 0 selects the default
/// threshold 50 * |base|^2.
TuranPrediction predict_ex_balloon(const Graph& base, long long n,
                                   bool lengths_at_least_five,
                                   long long trusted_n = 0);

/// Predicted extremal count for the cracking family of K_1 ∇ base (the
/// one-part constructions).
TuranPrediction predict_ex_decomposition(const Graph& base, long long n,
                                         long long trusted_n = 0);

/// Symbolic reduction for targets with chromatic number >= 4: the extremal
/// graphs of the ballooning coincide with those of the skeleton.
TuranPrediction predict_chi4(long long n);

/// Leading term (1 - 1/(chi-1)) * n(n-1)/2 as an exact rational.
Rational erdos_stone_asymptotic(long long n, long long chi);

}  // namespace turan

#pragma once

#include <initializer_list>
#include <map>

#include "turan/canonical.hpp"
#include "turan/graph.hpp"

namespace turan {

/// A set of pairwise non-isomorphic graphs, keyed by canonical form.
/// Members are stored as canonical representatives, so iteration order and
/// serialized output do not depend on how inputs were labelled.
class GraphFamily {
 public:
  GraphFamily() = default;
  GraphFamily(std::initializer_list<Graph> graphs) {
    for (const auto& g : graphs) insert(g);
  }

  /// Returns true if the graph's isomorphism class was new.
  bool insert(const Graph& g);

  bool contains_isomorphic(const Graph& g) const {
    return members_.count(canonical_form(g)) > 0;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  const std::map<CanonicalForm, Graph>& members() const { return members_; }

  bool operator==(const GraphFamily& other) const;

  void merge(const GraphFamily& other);

 private:
  std::map<CanonicalForm, Graph> members_;
};

}  // namespace turan

#include "turan/family.hpp"

namespace turan {

bool GraphFamily::insert(const Graph& g) {
  auto result = canonical_labeling(g);
  auto it = members_.find(result.form);
  if (it != members_.end()) return false;
  Graph rep = g.order() == 0 ? g : g.permuted(result.labeling);
  members_.emplace(std::move(result.form), std::move(rep));
  return true;
}

bool GraphFamily::operator==(const GraphFamily& other) const {
  if (members_.size() != other.members_.size()) return false;
  auto a = members_.begin();
  auto b = other.members_.begin();
  for (; a != members_.end(); ++a, ++b)
    if (a->first != b->first) return false;
  return true;
}

void GraphFamily::merge(const GraphFamily& other) {
  for (const auto& [form, graph] : other.members_)
    members_.emplace(form, graph);
}

}  // namespace turan

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "lapbound/graph.hpp"

namespace lapbound {

/// Identifies an isomorphism class: the graph6 string of the canonically
/// relabeled graph.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// perm[old] = new. Computed by equitable-partition refinement followed by a
/// search over individualizations; the leaf with the lexicographically
/// smallest adjacency rows wins. Subtrees equivalent under automorphisms
/// already discovered are skipped.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace lapbound

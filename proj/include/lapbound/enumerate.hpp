#pragma once

#include <vector>

#include "lapbound/graph.hpp"

namespace lapbound {

/// One canonically labeled representative per isomorphism class of graphs on
/// n vertices, ordered by (edge count, canonical graph6). Classes on n
/// vertices are grown from those on n-1 vertices by attaching a new vertex
/// to every neighbour subset, deduplicated by canonical form. `shards`
/// splits each growth step across threads; the output does not depend on it.
std::vector<Graph> enumerate_graphs(int n, int shards = 1);

/// levels[k] = enumerate_graphs(k) for k = 0..n_max.
std::vector<std::vector<Graph>> enumerate_graphs_up_to(int n_max, int shards = 1);

}  // namespace lapbound

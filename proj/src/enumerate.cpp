#include "lapbound/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

#include "lapbound/canonical.hpp"
#include "lapbound/graph6.hpp"

namespace lapbound {

namespace {

std::set<std::string> grow_shard(const std::vector<Graph>& parents, int shard, int shards) {
  std::set<std::string> seen;
  for (std::size_t i = static_cast<std::size_t>(shard); i < parents.size();
       i += static_cast<std::size_t>(shards)) {
    const Graph& parent = parents[i];
    const int n = parent.order() + 1;
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < parent.order(); ++v) rows[v] = parent.neighbors(v);
    for (VertexSet attach = 0; attach <= first_vertices(n - 1); ++attach) {
      std::vector<VertexSet> child = rows;
      child[n - 1] = attach;
      for (int v : members(attach)) child[v] |= singleton(n - 1);
      seen.insert(canonical_form(Graph::from_adjacency(child)).bytes);
      if (attach == first_vertices(n - 1)) break;
    }
  }
  return seen;
}

std::vector<Graph> grow(const std::vector<Graph>& parents, int shards) {
  shards = std::max(1, std::min<int>(shards, static_cast<int>(parents.size())));
  std::vector<std::set<std::string>> partial(static_cast<std::size_t>(shards));
  if (shards == 1) {
    partial[0] = grow_shard(parents, 0, 1);
  } else {
    std::vector<std::thread> workers;
    for (int s = 0; s < shards; ++s)
      workers.emplace_back([&, s] { partial[s] = grow_shard(parents, s, shards); });
    for (auto& w : workers) w.join();
  }
  std::set<std::string> merged;
  for (auto& p : partial) merged.merge(p);

  std::vector<Graph> out;
  out.reserve(merged.size());
  for (const auto& code : merged) out.push_back(parse_graph6(code));
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return a.edge_count() < b.edge_count();
  });
  return out;
}

}  // namespace

std::vector<std::vector<Graph>> enumerate_graphs_up_to(int n_max, int shards) {
  if (n_max < 0 || n_max > kMaxVertices)
    throw Error(ErrorKind::Capacity, "cannot enumerate graphs on " + std::to_string(n_max) +
                                         " vertices");
  std::vector<std::vector<Graph>> levels{{Graph{}}};
  for (int n = 1; n <= n_max; ++n) levels.push_back(grow(levels.back(), shards));
  return levels;
}

std::vector<Graph> enumerate_graphs(int n, int shards) {
  return std::move(enumerate_graphs_up_to(n, shards).back());
}

}  // namespace lapbound

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lapbound/graph.hpp"

namespace lapbound {

/// mu_m compared with the integer target d_m - m + 2.
enum class Relation { Below, Equal, Above };

std::string_view to_string(Relation r);

struct EqualityRow {
  int m = 0;
  int d_m = 0;
  int target = 0;  // d_m - m + 2, may be <= 0
  Relation relation = Relation::Above;
  double mu_float = 0.0;   // advisory only
  bool exception = false;  // graph is K_m u (n-m)K_1
};

struct EqualityReport {
  int n = 0;
  std::vector<EqualityRow> rows;  // rows[m - 1]

  const EqualityRow& at(int m) const& { return rows.at(static_cast<std::size_t>(m - 1)); }
  EqualityRow at(int m) && { return rows.at(static_cast<std::size_t>(m - 1)); }
};

/// g is isomorphic to K_m u (n-m)K_1.
bool is_exception_graph(const Graph& g, int m);

/// Per-m comparison of mu_m against d_m - m + 2, decided exactly on the
/// characteristic polynomial. Requires n >= 1.
EqualityReport bh_report(const Graph& g);

/// An m-subset S of a graph without isolated vertices whose members all have
/// degree >= d_m and which meets every edge.
struct NexusCertificate {
  int m = 0;
  VertexSet set = 0;
  int min_degree_in_set = 0;
  std::vector<int> outside_neighbor_counts;  // |Gamma(s) \ S| for s in S, ascending s
};

/// Every m-nexus, in lexicographic order of the member lists. Throws
/// Error(Precondition) if g has isolated vertices or m is out of range.
std::vector<NexusCertificate> find_nexuses(const Graph& g, int m);

/// Checks the nexus conditions for a specific set (no precondition on g).
bool is_nexus(const Graph& g, VertexSet set);

struct NexusReduceOptions {
  // When set, the top-degree subset and the deletion order are drawn at
  // random among the valid choices instead of the lexicographic ones.
  std::optional<std::uint64_t> shuffle_seed;
};

struct NexusReduction {
  Graph graph;                     // reduced graph, S is an m-nexus in it
  NexusCertificate certificate;    // labels refer to `graph`
  std::vector<int> kept;           // kept[new] = old vertex
  VertexSet original_set = 0;      // S in the input labels
  std::vector<Edge> deleted_edges; // input labels, in deletion order
  bool input_is_km_plus_k2 = false;  // input is K_m u K_2; reduces to K_m
};

/// Fixes an m-subset S of largest-degree vertices (degree descending, label
/// ascending), deletes edges disjoint from S one at a time, smallest pair
/// first, and drops the vertices outside S left isolated.
NexusReduction nexus_reduce(const Graph& g, int m, const NexusReduceOptions& options = {});

struct MuBoundCheck {
  int e = 0;                  // min over s in S of |Gamma(s) \ S|
  bool bound_holds = false;   // mu_{|S|} >= e
  bool equality = false;      // mu_{|S|} == e
  bool equality_condition_holds = false;  // !equality || S disconnected || e == 0
};

/// mu_{|S|} >= e, and at equality S induces a disconnected subgraph or e = 0.
MuBoundCheck lemma_mu_ge_e_check(const Graph& g, VertexSet set);

}  // namespace lapbound

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapbound/graph.hpp"

namespace lapbound {

enum class FamilyTag {
  PendantOne,           // K_m with p pendant vertices on one clique vertex
  PendantAll,           // K_m with e pendant vertices on every clique vertex
  CompleteBipartite2d,  // K_{2,d}
  ComplementFamily,     // complement(sK_1 u tK_2) u extra K_1
  TwoK2Family,          // 2K_2 u extra K_1
  EmptyFamily,          // extra K_1 (the edgeless graph)
  K2dPendantsBoth,      // K_{2,d} with c pendants on each of the two degree-d hubs
  K2dPendantOne,        // K_{2,d} with one pendant on a degree-d hub
};

std::string_view to_string(FamilyTag tag);
std::optional<FamilyTag> family_tag_from_string(std::string_view name);

/// Parameters not used by a tag stay zero. EmptyFamily stores its vertex
/// count in `extra`.
struct FamilySpec {
  FamilyTag tag = FamilyTag::EmptyFamily;
  int m = 0;
  int p = 0;
  int e = 0;
  int d = 0;
  int c = 0;
  int s = 0;
  int t = 0;
  int extra = 0;

  static FamilySpec pendant_one(int m, int p) { return {FamilyTag::PendantOne, m, p}; }
  static FamilySpec pendant_all(int m, int e) { return {FamilyTag::PendantAll, m, 0, e}; }
  static FamilySpec complete_bipartite_2d(int d) { return {FamilyTag::CompleteBipartite2d, 0, 0, 0, d}; }
  static FamilySpec complement_family(int s, int t, int extra) {
    return {FamilyTag::ComplementFamily, 0, 0, 0, 0, 0, s, t, extra};
  }
  static FamilySpec two_k2(int extra) { return {FamilyTag::TwoK2Family, 0, 0, 0, 0, 0, 0, 0, extra}; }
  static FamilySpec empty(int n) { return {FamilyTag::EmptyFamily, 0, 0, 0, 0, 0, 0, 0, n}; }
  static FamilySpec k2d_pendants_both(int c, int d) { return {FamilyTag::K2dPendantsBoth, 0, 0, 0, d, c}; }
  static FamilySpec k2d_pendant_one(int d) { return {FamilyTag::K2dPendantOne, 0, 0, 0, d}; }

  int vertex_count() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// e.g. "PendantOne(m=7, p=3)".
std::string describe(const FamilySpec& spec);

/// Parameter names in the order the CLI takes them, e.g. {"m", "p"}.
std::vector<std::string_view> parameter_names(FamilyTag tag);
FamilySpec make_spec(FamilyTag tag, const std::vector<int>& params);

/// Throws Error(InvalidParameter) when the parameters violate the family's
/// constraints. With `allow_degenerate`, PendantOne accepts p = 0 and
/// PendantAll accepts e = 0 (both then give bare K_m).
void validate(const FamilySpec& spec, bool allow_degenerate = false);

/// Clique or hub vertices come first (0..m-1, or the two hubs of K_{2,d}),
/// pendants follow in the order of the vertex they hang from, and extra
/// isolated vertices come last.
Graph generate(const FamilySpec& spec);

Graph generate_complement_family(int s, int t, int extra);

/// Every family membership of g with valid (non-degenerate) parameters,
/// decided structurally. Overlapping families are all reported; the list is
/// sorted by tag then parameters.
std::vector<FamilySpec> recognize(const Graph& g);

}  // namespace lapbound

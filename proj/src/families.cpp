#include "lapbound/families.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace lapbound {

namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 8> kTagNames{{
    {FamilyTag::PendantOne, "PendantOne"},
    {FamilyTag::PendantAll, "PendantAll"},
    {FamilyTag::CompleteBipartite2d, "CompleteBipartite2d"},
    {FamilyTag::ComplementFamily, "ComplementFamily"},
    {FamilyTag::TwoK2Family, "TwoK2Family"},
    {FamilyTag::EmptyFamily, "EmptyFamily"},
    {FamilyTag::K2dPendantsBoth, "K2dPendantsBoth"},
    {FamilyTag::K2dPendantOne, "K2dPendantOne"},
}};

auto key(const FamilySpec& f) { return std::tie(f.tag, f.m, f.p, f.e, f.d, f.c, f.s, f.t, f.extra); }

void require(bool ok, const FamilySpec& spec, const char* rule) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, describe(spec) + ": requires " + rule);
}

class Builder {
 public:
  explicit Builder(int n) : rows_(static_cast<std::size_t>(n), 0) {}
  void edge(int u, int v) {
    rows_[static_cast<std::size_t>(u)] |= singleton(v);
    rows_[static_cast<std::size_t>(v)] |= singleton(u);
  }
  void clique(int first, int count) {
    for (int u = first; u < first + count; ++u)
      for (int v = u + 1; v < first + count; ++v) edge(u, v);
  }
  Graph build() const { return Graph::from_adjacency(rows_); }

 private:
  std::vector<VertexSet> rows_;
};

// K_{2,d} on hubs 0, 1 and middle vertices 2..d+1 inside a graph of order n.
Builder k2d_core(int d, int n) {
  Builder b(n);
  for (int x = 2; x < d + 2; ++x) {
    b.edge(0, x);
    b.edge(1, x);
  }
  return b;
}

bool is_clique(const Graph& g, VertexSet set) {
  for (int v : members(set))
    if ((g.neighbors(v) & set) != (set & ~singleton(v))) return false;
  return true;
}

void recognize_pendant_one(const Graph& g, std::vector<FamilySpec>& out) {
  const int n = g.order();
  if (n < 2) return;
  for (int hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    // g - hub must be K_k plus isolated vertices.
    const VertexSet rest = g.vertices() & ~singleton(hub);
    VertexSet core = 0;
    for (int v : members(rest))
      if ((g.neighbors(v) & rest) != 0) core |= singleton(v);
    if (!is_clique(g, core)) continue;
    const int k = popcount(core);
    if (k >= 2) {
      if (n - k - 1 >= 1) out.push_back(FamilySpec::pendant_one(k + 1, n - k - 1));
    } else {
      out.push_back(FamilySpec::pendant_one(1, n - 1));
      if (n >= 3) out.push_back(FamilySpec::pendant_one(2, n - 2));
    }
  }
}

void recognize_pendant_all(const Graph& g, std::vector<FamilySpec>& out) {
  VertexSet leaves = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return;
    if (g.degree(v) == 1) leaves |= singleton(v);
  }
  const VertexSet core = g.vertices() & ~leaves;
  const int m = popcount(core);
  if (m < 2 || !is_clique(g, core)) return;
  int e = -1;
  for (int v : members(core)) {
    const VertexSet outside = g.neighbors(v) & ~core;
    if ((outside & ~leaves) != 0) return;
    if (e == -1) e = popcount(outside);
    if (popcount(outside) != e) return;
  }
  for (int leaf : members(leaves))
    if ((g.neighbors(leaf) & core) == 0) return;
  if (e >= 1) out.push_back(FamilySpec::pendant_all(m, e));
}

void recognize_k2d(const Graph& g, std::vector<FamilySpec>& out) {
  const int n = g.order();
  if (n < 4) return;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const VertexSet middle = g.vertices() & ~singleton(a) & ~singleton(b);
      if (g.neighbors(a) != middle || g.neighbors(b) != middle) continue;
      bool independent = true;
      for (int x : members(middle)) independent = independent && (g.neighbors(x) & middle) == 0;
      if (independent) {
        out.push_back(FamilySpec::complete_bipartite_2d(n - 2));
        return;
      }
    }
}

void recognize_complement_family(const Graph& g, std::vector<FamilySpec>& out) {
  const int n = g.order();
  const int edges = g.edge_count();
  if (edges == 0) {
    // complement(K_2) = 2K_1, so m = 2 absorbs two isolated vertices.
    if (n >= 2) out.push_back(FamilySpec::complement_family(0, 1, n - 2));
    return;
  }
  const VertexSet active = g.vertices() & ~isolated_vertices(g);
  const Graph h = complement(induced_subgraph(g, active).graph);
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) > 1) return;
  const int t = h.edge_count();
  if (t >= 1) out.push_back(FamilySpec::complement_family(h.order() - 2 * t, t, n - h.order()));
}

void recognize_component_census(const Graph& g, std::vector<FamilySpec>& out) {
  const int n = g.order();
  const auto edges = g.edges();
  if (edges.empty() && n >= 1) out.push_back(FamilySpec::empty(n));
  if (edges.size() == 2) {
    const VertexSet ends = singleton(edges[0].first) | singleton(edges[0].second) |
                           singleton(edges[1].first) | singleton(edges[1].second);
    if (popcount(ends) == 4) out.push_back(FamilySpec::two_k2(n - 4));
  }
}

void recognize_k2d_pendant_graphs(const Graph& g, std::vector<FamilySpec>& out) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || g.adjacent(a, b)) continue;
      const VertexSet middle = g.neighbors(a) & g.neighbors(b);
      const VertexSet hubs = singleton(a) | singleton(b);
      const int d = popcount(middle);
      if (d == 0) continue;
      bool ok = true;
      for (int x : members(middle)) ok = ok && g.neighbors(x) == hubs;
      if (!ok) continue;
      const VertexSet pa = g.neighbors(a) & ~middle;
      const VertexSet pb = g.neighbors(b) & ~middle;
      for (int x : members(pa | pb)) ok = ok && g.degree(x) == 1;
      if (!ok) continue;
      const int ca = popcount(pa);
      const int cb = popcount(pb);
      if (a < b && ca == cb && ca >= 1 && n == 2 + d + 2 * ca)
        out.push_back(FamilySpec::k2d_pendants_both(ca, d));
      if (ca == 1 && cb == 0 && d >= 2 && n == d + 3) out.push_back(FamilySpec::k2d_pendant_one(d));
    }
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "Unknown";
}

std::optional<FamilyTag> family_tag_from_string(std::string_view name) {
  for (const auto& [t, n] : kTagNames)
    if (n == name) return t;
  return std::nullopt;
}

int FamilySpec::vertex_count() const {
  switch (tag) {
    case FamilyTag::PendantOne: return m + p;
    case FamilyTag::PendantAll: return m * (e + 1);
    case FamilyTag::CompleteBipartite2d: return d + 2;
    case FamilyTag::ComplementFamily: return s + 2 * t + extra;
    case FamilyTag::TwoK2Family: return 4 + extra;
    case FamilyTag::EmptyFamily: return extra;
    case FamilyTag::K2dPendantsBoth: return 2 + d + 2 * c;
    case FamilyTag::K2dPendantOne: return d + 3;
  }
  return 0;
}

std::vector<std::string_view> parameter_names(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::PendantOne: return {"m", "p"};
    case FamilyTag::PendantAll: return {"m", "e"};
    case FamilyTag::CompleteBipartite2d: return {"d"};
    case FamilyTag::ComplementFamily: return {"s", "t", "extra"};
    case FamilyTag::TwoK2Family: return {"extra"};
    case FamilyTag::EmptyFamily: return {"n"};
    case FamilyTag::K2dPendantsBoth: return {"c", "d"};
    case FamilyTag::K2dPendantOne: return {"d"};
  }
  return {};
}

FamilySpec make_spec(FamilyTag tag, const std::vector<int>& params) {
  if (params.size() != parameter_names(tag).size())
    throw Error(ErrorKind::InvalidParameter, std::string(to_string(tag)) + " takes " +
                                                 std::to_string(parameter_names(tag).size()) +
                                                 " parameters");
  switch (tag) {
    case FamilyTag::PendantOne: return FamilySpec::pendant_one(params[0], params[1]);
    case FamilyTag::PendantAll: return FamilySpec::pendant_all(params[0], params[1]);
    case FamilyTag::CompleteBipartite2d: return FamilySpec::complete_bipartite_2d(params[0]);
    case FamilyTag::ComplementFamily: return FamilySpec::complement_family(params[0], params[1], params[2]);
    case FamilyTag::TwoK2Family: return FamilySpec::two_k2(params[0]);
    case FamilyTag::EmptyFamily: return FamilySpec::empty(params[0]);
    case FamilyTag::K2dPendantsBoth: return FamilySpec::k2d_pendants_both(params[0], params[1]);
    case FamilyTag::K2dPendantOne: return FamilySpec::k2d_pendant_one(params[0]);
  }
  return {};
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  os << to_string(spec.tag) << '(';
  const auto names = parameter_names(spec.tag);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string_view name = names[i];
    int value = 0;
    if (name == "m") value = spec.m;
    else if (name == "p") value = spec.p;
    else if (name == "e") value = spec.e;
    else if (name == "d") value = spec.d;
    else if (name == "c") value = spec.c;
    else if (name == "s") value = spec.s;
    else if (name == "t") value = spec.t;
    else value = spec.extra;
    os << (i ? ", " : "") << name << '=' << value;
  }
  os << ')';
  return os.str();
}

void validate(const FamilySpec& spec, bool allow_degenerate) {
  const int floor = allow_degenerate ? 0 : 1;
  switch (spec.tag) {
    case FamilyTag::PendantOne:
      require(spec.m >= 1 && spec.p >= floor, spec, allow_degenerate ? "m >= 1, p >= 0" : "m >= 1, p >= 1");
      break;
    case FamilyTag::PendantAll:
      require(spec.m >= 2 && spec.e >= floor, spec, allow_degenerate ? "m >= 2, e >= 0" : "m >= 2, e >= 1");
      break;
    case FamilyTag::CompleteBipartite2d: require(spec.d >= 2, spec, "d >= 2"); break;
    case FamilyTag::ComplementFamily:
      require(spec.t >= 1 && spec.s >= 0 && spec.extra >= 0, spec, "t >= 1, s >= 0, extra >= 0");
      break;
    case FamilyTag::TwoK2Family: require(spec.extra >= 0, spec, "extra >= 0"); break;
    case FamilyTag::EmptyFamily: require(spec.extra >= 1, spec, "n >= 1"); break;
    case FamilyTag::K2dPendantsBoth: require(spec.c >= 1 && spec.d >= 1, spec, "c >= 1, d >= 1"); break;
    case FamilyTag::K2dPendantOne: require(spec.d >= 2, spec, "d >= 2"); break;
  }
  if (spec.vertex_count() > kMaxVertices)
    throw Error(ErrorKind::Capacity, describe(spec) + ": more than 32 vertices");
}

Graph generate(const FamilySpec& spec) {
  validate(spec, /*allow_degenerate=*/true);
  const int n = spec.vertex_count();
  switch (spec.tag) {
    case FamilyTag::PendantOne: {
      Builder b(n);
      b.clique(0, spec.m);
      for (int leaf = spec.m; leaf < n; ++leaf) b.edge(0, leaf);
      return b.build();
    }
    case FamilyTag::PendantAll: {
      Builder b(n);
      b.clique(0, spec.m);
      for (int v = 0; v < spec.m; ++v)
        for (int j = 0; j < spec.e; ++j) b.edge(v, spec.m + v * spec.e + j);
      return b.build();
    }
    case FamilyTag::CompleteBipartite2d: return k2d_core(spec.d, n).build();
    case FamilyTag::ComplementFamily: return generate_complement_family(spec.s, spec.t, spec.extra);
    case FamilyTag::TwoK2Family: {
      Builder b(n);
      b.edge(0, 1);
      b.edge(2, 3);
      return b.build();
    }
    case FamilyTag::EmptyFamily: return Graph(n);
    case FamilyTag::K2dPendantsBoth: {
      Builder b = k2d_core(spec.d, n);
      int next = spec.d + 2;
      for (int hub = 0; hub < 2; ++hub)
        for (int j = 0; j < spec.c; ++j) b.edge(hub, next++);
      return b.build();
    }
    case FamilyTag::K2dPendantOne: {
      Builder b = k2d_core(spec.d, n);
      b.edge(0, spec.d + 2);
      return b.build();
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

Graph generate_complement_family(int s, int t, int extra) {
  validate(FamilySpec::complement_family(s, t, extra));
  const int m = s + 2 * t;
  Builder base(m);
  for (int i = 0; i < t; ++i) base.edge(s + 2 * i, s + 2 * i + 1);
  return disjoint_union(complement(base.build()), Graph(extra));
}

std::vector<FamilySpec> recognize(const Graph& g) {
  std::vector<FamilySpec> out;
  recognize_pendant_one(g, out);
  recognize_pendant_all(g, out);
  recognize_k2d(g, out);
  recognize_complement_family(g, out);
  recognize_component_census(g, out);
  recognize_k2d_pendant_graphs(g, out);
  std::sort(out.begin(), out.end(), [](const FamilySpec& a, const FamilySpec& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lapbound

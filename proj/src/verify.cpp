#include "lapbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "lapbound/analysis.hpp"
#include "lapbound/canonical.hpp"
#include "lapbound/enumerate.hpp"
#include "lapbound/families.hpp"
#include "lapbound/graph6.hpp"
#include "lapbound/spectral.hpp"

namespace lapbound {

namespace {

constexpr double kFloatTolerance = 1e-9;
constexpr double kTieBand = 1e-6;

std::vector<Graph> graphs_up_to(int n_max, int shards, int n_min = 1) {
  if (n_max > 10) throw Error(ErrorKind::InvalidParameter, "n_max above 10 is outside the exhaustive range");
  std::vector<Graph> all;
  if (n_max < n_min) return all;
  auto levels = enumerate_graphs_up_to(n_max, shards);
  for (int n = n_min; n <= n_max; ++n)
    for (Graph& g : levels[static_cast<std::size_t>(n)]) all.push_back(std::move(g));
  return all;
}

std::string graph_item(const Graph& g) { return write_graph6(g); }

std::string graph_item(const Graph& g, int m) { return write_graph6(g) + " m=" + std::to_string(m); }

std::string item(std::initializer_list<std::pair<const char*, long>> params) {
  std::string out = "(";
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) out += ", ";
    first = false;
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out + ")";
}

std::string range_n(int n_max) { return "n<=" + std::to_string(n_max); }

std::string join_specs(const std::vector<FamilySpec>& specs) {
  if (specs.empty()) return "none";
  std::string out;
  for (const auto& s : specs) {
    if (!out.empty()) out += "; ";
    out += describe(s);
  }
  return out;
}

bool contains(const std::vector<FamilySpec>& specs, const FamilySpec& want) {
  return std::find(specs.begin(), specs.end(), want) != specs.end();
}

template <class Pred>
bool contains_if(const std::vector<FamilySpec>& specs, Pred pred) {
  return std::any_of(specs.begin(), specs.end(), pred);
}

Integer power(long base, long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string format_values(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_double(xs[i]);
  }
  return out + "]";
}

Rational frac(long num, long den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

}  // namespace

void VerificationReport::check(bool good, std::string item, std::string expected, std::string observed) {
  ++checked;
  if (good)
    ++passed;
  else
    counterexamples.push_back({std::move(item), std::move(expected), std::move(observed)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  passed += other.passed;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  for (const auto& [key, value] : other.tallies) tallies[key] += value;
}

void VerificationReport::normalize() {
  std::sort(counterexamples.begin(), counterexamples.end());
}

VerificationReport run_sharded(std::string campaign, std::string range, long items, int shards,
                               const std::function<void(long, VerificationReport&)>& work) {
  if (shards < 1) throw Error(ErrorKind::InvalidParameter, "shard count must be at least 1");
  std::vector<VerificationReport> parts(static_cast<std::size_t>(shards));
  auto run = [&](int s) {
    for (long i = s; i < items; i += shards) work(i, parts[static_cast<std::size_t>(s)]);
  };
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < shards; ++s) threads.emplace_back(run, s);
    for (auto& t : threads) t.join();
  }
  VerificationReport out;
  out.campaign = std::move(campaign);
  out.range = std::move(range);
  for (const auto& p : parts) out.merge(p);
  out.normalize();
  return out;
}

VerificationReport verify_bh(int n_max, int shards) {
  const std::vector<Graph> graphs = graphs_up_to(n_max, shards);
  auto report = run_sharded("bh", range_n(n_max), static_cast<long>(graphs.size()), shards,
                            [&](long i, VerificationReport& r) {
    const Graph& g = graphs[static_cast<std::size_t>(i)];
    const EqualityReport bh = bh_report(g);
    bool good = true;
    std::string observed;
    for (const EqualityRow& row : bh.rows) {
      r.tally("pairs (graph, m)");
      if (row.exception) r.tally("exception pairs");
      if (row.relation == Relation::Equal) r.tally("equality pairs");
      const bool row_ok = row.exception ? row.relation == Relation::Below && row.target == 1
                                        : row.relation != Relation::Below;
      if (!row_ok) {
        good = false;
        observed += "m=" + std::to_string(row.m) + " " + std::string(to_string(row.relation)) +
                    (row.exception ? " (exception) " : " ");
      }
    }
    r.tally("graphs n=" + std::to_string(g.order()));
    r.check(good, graph_item(g), "mu_m >= d_m - m + 2 off the exceptions", observed);
  });
  return report;
}

VerificationReport verify_equality_zero(int n_max, int shards) {
  const std::vector<Graph> graphs = graphs_up_to(n_max, shards);
  const long forward = static_cast<long>(graphs.size());

  // Converse items: complement family with s + 2t + extra <= 9, then nK_1
  // (m = 2) and 2K_2 u extra K_1 (m = 3).
  std::vector<FamilySpec> converse;
  for (int s = 0; s <= 9; ++s)
    for (int t = 1; s + 2 * t <= 9; ++t)
      for (int extra = 0; s + 2 * t + extra <= 9; ++extra) converse.push_back(FamilySpec::complement_family(s, t, extra));
  for (int n = 2; n <= 9; ++n) converse.push_back(FamilySpec::empty(n));
  for (int extra = 0; extra <= 5; ++extra) converse.push_back(FamilySpec::two_k2(extra));

  auto report = run_sharded(
      "equality_zero", range_n(n_max) + "; converse s+2t+extra<=9",
      forward + static_cast<long>(converse.size()), shards, [&](long i, VerificationReport& r) {
        if (i < forward) {
          const Graph& g = graphs[static_cast<std::size_t>(i)];
          const EqualityReport bh = bh_report(g);
          std::vector<FamilySpec> specs;
          bool recognized = false;
          for (const EqualityRow& row : bh.rows) {
            if (row.target != 0 || row.relation != Relation::Equal) continue;
            if (!recognized) {
              specs = recognize(g);
              recognized = true;
            }
            const int m = row.m;
            const bool case1 = m == 2 && contains(specs, FamilySpec::empty(g.order()));
            const bool case2 = m == 3 && contains(specs, FamilySpec::two_k2(g.order() - 4));
            const bool case3 = contains_if(specs, [&](const FamilySpec& s) {
              return s.tag == FamilyTag::ComplementFamily && s.s + 2 * s.t == m;
            });
            if (case1) r.tally("forward case nK1");
            if (case2) r.tally("forward case 2K2");
            if (case3) r.tally("forward case complement");
            r.check(case1 || case2 || case3, graph_item(g, m), "nK1 (m=2), 2K2 u K1s (m=3) or complement family",
                    join_specs(specs));
          }
          return;
        }
        const FamilySpec& spec = converse[static_cast<std::size_t>(i - forward)];
        const Graph g = generate(spec);
        const int m = spec.tag == FamilyTag::ComplementFamily ? spec.s + 2 * spec.t
                      : spec.tag == FamilyTag::EmptyFamily    ? 2
                                                              : 3;
        const EqualityRow row = bh_report(g).at(m);
        r.tally("converse family members");
        r.check(row.target == 0 && row.relation == Relation::Equal, describe(spec) + " m=" + std::to_string(m),
                "target 0 EQUAL", "target " + std::to_string(row.target) + " " + std::string(to_string(row.relation)));
      });
  return report;
}

VerificationReport verify_equality_one(int n_max, int shards) {
  const std::vector<Graph> graphs = graphs_up_to(n_max, shards);
  const long forward = static_cast<long>(graphs.size());

  std::vector<FamilySpec> converse;
  for (int m = 2; m <= 9; ++m)
    for (int p = 1; m + p <= 10; ++p) converse.push_back(FamilySpec::pendant_one(m, p));
  const long converse_count = static_cast<long>(converse.size());
  // Degenerate p = 0 members (bare K_m) are run and tallied, not asserted.
  std::vector<int> degenerate;
  for (int m = 2; m <= 10; ++m) degenerate.push_back(m);

  auto report = run_sharded(
      "equality_one", range_n(n_max) + "; converse 2<=m, p>=1, m+p<=10",
      forward + converse_count + static_cast<long>(degenerate.size()), shards, [&](long i, VerificationReport& r) {
        if (i < forward) {
          const Graph& g = graphs[static_cast<std::size_t>(i)];
          const EqualityReport bh = bh_report(g);
          for (const EqualityRow& row : bh.rows) {
            if (row.target != 1 || row.relation != Relation::Equal) continue;
            const Relabeled core = drop_isolated(g);
            if (core.graph.order() != g.order()) r.tally("forward hits with isolated vertices stripped");
            const std::vector<FamilySpec> specs = recognize(core.graph);
            const bool ok = contains_if(specs, [&](const FamilySpec& s) {
              return s.tag == FamilyTag::PendantOne && s.m == row.m && s.p >= 1;
            });
            r.tally("forward equality hits");
            r.check(ok, graph_item(g, row.m), "PendantOne(m=" + std::to_string(row.m) + ", p>=1) plus isolated vertices",
                    join_specs(specs));
          }
          return;
        }
        if (i < forward + converse_count) {
          const FamilySpec& spec = converse[static_cast<std::size_t>(i - forward)];
          const EqualityRow row = bh_report(generate(spec)).at(spec.m);
          r.tally("converse family members");
          r.check(row.target == 1 && row.relation == Relation::Equal, describe(spec), "target 1 EQUAL",
                  "target " + std::to_string(row.target) + " " + std::string(to_string(row.relation)));
          return;
        }
        const int m = degenerate[static_cast<std::size_t>(i - forward - converse_count)];
        const EqualityRow row = bh_report(generate(FamilySpec::pendant_one(m, 0))).at(m);
        if (row.relation != Relation::Equal) r.tally("degenerate p=0 (bare K_m) without equality");
      });
  report.notes.push_back("isolated vertices are stripped before recognition (equality at target 1 survives adding K1)");
  report.notes.push_back("m=1 is not part of the converse: a star at m=1 has target p+1");
  report.notes.push_back("degenerate p=0 gives K_m, which is the exception graph at target 1 (family-parameter-degenerate)");
  return report;
}

VerificationReport verify_nexus_classification(int n_max, int shards) {
  const std::vector<Graph> graphs = graphs_up_to(n_max, shards);
  const long forward = static_cast<long>(graphs.size());

  struct Showcase {
    FamilySpec spec;
    int m;
    int target;
  };
  const std::vector<Showcase> showcases = {
      {FamilySpec::pendant_one(7, 3), 7, 1},
      {FamilySpec::pendant_all(6, 2), 6, 3},
      {FamilySpec::complete_bipartite_2d(4), 2, 4},
  };

  auto report = run_sharded(
      "nexus", range_n(n_max) + "; showcase graphs", forward + static_cast<long>(showcases.size()), shards,
      [&](long i, VerificationReport& r) {
        if (i >= forward) {
          const Showcase& f = showcases[static_cast<std::size_t>(i - forward)];
          const Graph g = generate(f.spec);
          const EqualityRow row = bh_report(g).at(f.m);
          const bool nexus = !find_nexuses(g, f.m).empty();
          const bool recognized = contains(recognize(g), f.spec);
          r.tally("showcase graphs");
          r.check(row.target == f.target && row.relation == Relation::Equal && nexus && recognized,
                  describe(f.spec) + " m=" + std::to_string(f.m) + " " + write_graph6(g),
                  "target " + std::to_string(f.target) + " EQUAL with a nexus, recognized",
                  "target " + std::to_string(row.target) + " " + std::string(to_string(row.relation)) +
                      (nexus ? "" : " no nexus") + (recognized ? "" : " not recognized"));
          return;
        }
        const Graph& g = graphs[static_cast<std::size_t>(i)];
        if (isolated_vertices(g) != 0) {
          r.tally("skipped graphs with isolated vertices");
          return;
        }
        const EqualityReport bh = bh_report(g);
        std::vector<FamilySpec> specs;
        bool recognized = false;
        for (const EqualityRow& row : bh.rows) {
          if (row.target < 1 || row.relation != Relation::Equal) continue;
          if (find_nexuses(g, row.m).empty()) continue;
          if (!recognized) {
            specs = recognize(g);
            recognized = true;
          }
          const int m = row.m;
          const int mu = row.target;
          const bool case1 = mu == 1 && contains_if(specs, [&](const FamilySpec& s) {
                               return s.tag == FamilyTag::PendantOne && s.m == m && s.p >= 1;
                             });
          const bool case2 = mu >= 2 && contains(specs, FamilySpec::pendant_all(m, mu - 1));
          const bool case3 = m == 2 && mu >= 2 && contains(specs, FamilySpec::complete_bipartite_2d(mu));
          // K_1 with mu - 1 pendants on its only vertex is the star PendantOne(1, mu - 1).
          const bool star = m == 1 && contains(specs, FamilySpec::pendant_one(1, mu - 1));
          if (case1) r.tally("case pendant-one");
          if (case2) r.tally("case pendant-all");
          if (case3) r.tally("case K2d");
          if (star) r.tally("case pendant-all at m=1 (star)");
          r.check(case1 || case2 || case3 || star, graph_item(g, m),
                  "PendantOne (mu=1), PendantAll(e=mu-1) or K_{2,mu} (m=2)",
                  "mu=" + std::to_string(mu) + " " + join_specs(specs));
        }
      });
  report.notes.push_back("graphs with isolated vertices are skipped: the m-nexus is defined only without them");
  return report;
}

VerificationReport verify_det_lemma_both_sides(int c_max, int d_max, int shards) {
  if (c_max < 1 || d_max < 1) throw Error(ErrorKind::InvalidParameter, "c_max and d_max must be at least 1");
  if (2 + d_max + 2 * c_max > kMaxVertices) throw Error(ErrorKind::Capacity, "grid exceeds the vertex capacity");
  std::vector<std::pair<int, int>> grid;
  for (int c = 1; c <= c_max; ++c)
    for (int d = 1; d <= d_max; ++d) grid.emplace_back(c, d);
  return run_sharded("det_both_sides", "1<=c<=" + std::to_string(c_max) + ", 1<=d<=" + std::to_string(d_max),
                     static_cast<long>(grid.size()), shards, [&](long i, VerificationReport& r) {
    const auto [c, d] = grid[static_cast<std::size_t>(i)];
    const Graph g = generate(FamilySpec::k2d_pendants_both(c, d));
    const LaplacianMatrix l = laplacian(g);
    if (c == 1 && d == 1) {
      // The path on five vertices: 2 must not be an eigenvalue.
      const bool path = are_isomorphic(g, Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
      const int mult = ExactSpectrum(l).multiplicity(Rational(2));
      r.check(path && mult == 0, item({{"c", 1}, {"d", 1}}), "P5 without eigenvalue 2",
              std::string(path ? "P5" : "not P5") + ", multiplicity of 2 = " + std::to_string(mult));
      return;
    }
    const Integer closed = Integer(c) * (c + d) * (c + 2 * d - 2) * power(c + d - 1, 2L * (c - 1)) *
                           power(c + d - 2, d - 1);
    const Integer det = det_shift(l, Integer(c + d));
    r.check(det == closed && det != 0, item({{"c", c}, {"d", d}}), closed.get_str(), det.get_str());
  });
}

VerificationReport verify_det_lemma_one_pendant(int d_max, int shards) {
  if (d_max < 2) throw Error(ErrorKind::InvalidParameter, "d_max must be at least 2");
  if (d_max + 3 > kMaxVertices) throw Error(ErrorKind::Capacity, "grid exceeds the vertex capacity");
  return run_sharded("det_one_pendant", "2<=d<=" + std::to_string(d_max), d_max - 1, shards,
                     [&](long i, VerificationReport& r) {
    const int d = static_cast<int>(i) + 2;
    const Graph g = generate(FamilySpec::k2d_pendant_one(d));
    const LaplacianMatrix l = laplacian(g);
    const ExactSpectrum exact(l);
    if (d >= 3) {
      const Integer closed = Integer(d) * d * power(d - 2, d - 1);
      const Integer det = det_shift(l, Integer(d));
      r.check(det == closed, item({{"d", d}}) + " det(dI-L)", closed.get_str(), det.get_str());
    } else {
      const Graph c4_pendant = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
      r.check(are_isomorphic(g, c4_pendant), item({{"d", 2}}) + " shape", "C4 with a pendant", write_graph6(g));
    }
    const int cmp = exact.compare_mu(2, Rational(d));
    r.check(cmp > 0 && exact.count_at_least(Rational(d)) >= 2, item({{"d", d}}) + " mu_2 > d", "mu_2 > d",
            cmp == 0 ? "mu_2 = d" : cmp < 0 ? "mu_2 < d" : "mu_2 > d");
  });
}

std::vector<double> quotient_r_eigenvalues(int e, int m, int t, int r) {
  if (e < 0 || t < 1 || t > m || r < 1) throw Error(ErrorKind::InvalidParameter, "need e>=0, 1<=t<=m, r>=1");
  std::vector<double> values;
  QuotientMatrix q;
  if (t < m) {
    q.entries = RatMatrix(3);
    q.block_sizes = {t, m - t, r};
    q.entries(0, 0) = e + m - t;
    q.entries(0, 1) = -m + t;
    q.entries(0, 2) = -e;
    q.entries(1, 0) = -t;
    q.entries(1, 1) = e + t + 1;
    q.entries(1, 2) = -e - 1;
    q.entries(2, 0) = frac(-t * e, r);
    q.entries(2, 1) = frac(-(e + 1) * (m - t), r);
    q.entries(2, 2) = frac(m * e + m - t, r);
  } else {
    // The middle column is (0, e+m+1, 0): that eigenvalue splits off and
    // the rest is the quotient for block sizes (t, r).
    values.push_back(e + m + 1);
    q.entries = RatMatrix(2);
    q.block_sizes = {t, r};
    q.entries(0, 0) = e;
    q.entries(0, 1) = -e;
    q.entries(1, 0) = frac(-t * e, r);
    q.entries(1, 1) = frac(m * e, r);
  }
  for (double x : jacobi_eigenvalues(q.symmetrized())) values.push_back(x);
  std::sort(values.begin(), values.end());
  return values;
}

VerificationReport verify_quotient_closed_form(const QuotientGrid& grid, int shards) {
  if (grid.e_max < 0 || grid.m_max < 1 || grid.r_max < 1)
    throw Error(ErrorKind::InvalidParameter, "need e_max>=0, m_max>=1, r_max>=1");
  struct Point {
    int e, m, t, r;
  };
  std::vector<Point> points;
  for (int e = 0; e <= grid.e_max; ++e)
    for (int m = 1; m <= grid.m_max; ++m)
      for (int t = 1; t <= m; ++t)
        for (int r = 1; r <= grid.r_max; ++r) points.push_back({e, m, t, r});

  auto report = run_sharded(
      "quotient",
      "0<=e<=" + std::to_string(grid.e_max) + ", 1<=t<=m<=" + std::to_string(grid.m_max) + ", 1<=r<=" +
          std::to_string(grid.r_max),
      static_cast<long>(points.size()), shards, [&](long i, VerificationReport& rep) {
        const auto [e, m, t, r] = points[static_cast<std::size_t>(i)];
        const std::string where = item({{"e", e}, {"m", m}, {"t", t}, {"r", r}});
        const Integer E(e), M(m), T(t), R(r);
        const Integer a = (E + 1) * M + (2 * E + M + 1) * R - T;
        const Integer b = (E + 1) * (E + 1) * M * M + (M - 1) * (M - 1) * R * R - 2 * (E + 1) * M * (M - 1) * R -
                          2 * ((E + 1) * M + (2 * E - M + 1) * R - 2 * R * R) * T + T * T;
        const Integer lhs = (a - 2 * R * (E + 1)) * (a - 2 * R * (E + 1)) - b;
        const Integer rhs = 4 * R * ((M - T) * (E * (M - 1) + M - T - 1) + T * (M * E + M - T - R));
        const Integer literal = 4 * R * (M - T) * (E * (M - 1) + (M - (T + 1)) + T * (M * E + M - T - R));
        if (lhs != literal) rep.tally("ungrouped identity reading fails");

        RatMatrix rm(3);
        rm(0, 0) = e + m - t;
        rm(0, 1) = -m + t;
        rm(0, 2) = -e;
        rm(1, 0) = -t;
        rm(1, 1) = e + t + 1;
        rm(1, 2) = -e - 1;
        rm(2, 0) = frac(-t * e, r);
        rm(2, 1) = frac(-(e + 1) * (m - t), r);
        rm(2, 2) = frac(m * e + m - t, r);
        Rational ar(a, R);
        ar.canonicalize();
        Rational c0(a * a - b, 4 * R * R);
        c0.canonicalize();
        const RatPoly expected_poly({Rational(0), c0, Rational(-ar), Rational(1)});
        const RatPoly poly = char_poly(rm);
        // t R_12 = (m - t) R_21 and so on: R is the quotient of a symmetric matrix.
        const std::vector<Integer> sizes = {T, M - T, R};
        bool weighted_symmetric = true;
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y)
            if (rm(x, y) * sizes[static_cast<std::size_t>(x)] != rm(y, x) * sizes[static_cast<std::size_t>(y)])
              weighted_symmetric = false;

        const bool exact_ok = lhs == rhs && b >= 0 && poly == expected_poly && weighted_symmetric;
        rep.tally(exact_ok ? "exact checks passed" : "exact checks failed");
        if (!exact_ok) {
          std::string observed = "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str() + " B=" + b.get_str();
          if (!(poly == expected_poly)) observed += " charpoly " + to_string(poly);
          if (!weighted_symmetric) observed += " not block-symmetric";
          rep.check(false, "exact " + where, "identity, B>=0, charpoly x(x^2-(A/r)x+(A^2-B)/4r^2)", observed);
          return;
        }
        if (b == 0) rep.tally("double eigenvalue (B=0)");
        if (a * a == b) rep.tally("double eigenvalue 0 (A^2=B)");

        const double sq = std::sqrt(b.get_d());
        std::vector<double> closed = {0.0, (a.get_d() - sq) / (2.0 * r), (a.get_d() + sq) / (2.0 * r)};
        std::sort(closed.begin(), closed.end());
        const std::vector<double> got = quotient_r_eigenvalues(e, m, t, r);
        double err = 0;
        for (std::size_t k = 0; k < 3; ++k) err = std::max(err, std::abs(got[k] - closed[k]));
        rep.tally(err <= kFloatTolerance ? "float checks passed" : "float checks failed");
        rep.check(err <= kFloatTolerance, "float " + where, format_values(closed), format_values(got));
      });
  report.notes.push_back("identity checked with grouping 4r[(m-t)(e(m-1)+m-t-1) + t(me+m-t-r)]");
  report.notes.push_back("exact checks use integers and rationals only; the float eigenvalue match is a separate check");
  return report;
}

VerificationReport verify_cubic_f(const CubicGrid& grid, int shards) {
  if (grid.e_max < 0 || grid.m_min > grid.m_max) throw Error(ErrorKind::InvalidParameter, "empty cubic grid");
  std::vector<std::pair<int, int>> points;
  for (int e = 0; e <= grid.e_max; ++e)
    for (int m = grid.m_min; m <= grid.m_max; ++m) points.emplace_back(e, m);
  auto report = run_sharded(
      "cubic_f",
      "0<=e<=" + std::to_string(grid.e_max) + ", " + std::to_string(grid.m_min) + "<=m<=" + std::to_string(grid.m_max),
      static_cast<long>(points.size()), shards, [&](long i, VerificationReport& r) {
        const auto [e, m] = points[static_cast<std::size_t>(i)];
        const std::string where = item({{"e", e}, {"m", m}});
        const IntPoly f({Integer(-2 * e + 1), Integer(3 * e + 2 * m - 1), Integer(-(e + m + 2)), Integer(1)});
        IntMatrix a(3);
        a(0, 0) = e + m - 1;
        a(0, 1) = 1 - m;
        a(0, 2) = -1;
        a(1, 0) = -1;
        a(1, 1) = 1;
        a(2, 0) = -1;
        a(2, 2) = 2;
        const IntPoly p = char_poly(a);
        r.check(p == f, where + " charpoly", to_string(f), to_string(p));
        const Integer f1 = f.evaluate(Integer(1));
        r.check(f1 == m - 1, where + " f(1)", std::to_string(m - 1), f1.get_str());
        const Integer f3 = f.evaluate(Integer(3));
        r.check(f3 == -2 * e - 3 * m + 7, where + " f(3)", std::to_string(-2 * e - 3 * m + 7), f3.get_str());
        if (f3 >= 0) r.tally("f(3) >= 0 at " + where);
      });
  report.notes.push_back("f(3) is checked against the expansion -2e-3m+7; the variant -2r-3m+7 (r for e) is a misprint");
  return report;
}

VerificationReport verify_interlacing(int trials, std::uint64_t seed, int shards) {
  if (trials < 0) throw Error(ErrorKind::InvalidParameter, "trial count must be non-negative");
  enum class Kind { EdgeDeletion, Principal, Quotient };
  struct Trial {
    Kind kind;
    Graph g;
    Edge edge;                              // EdgeDeletion
    VertexSet subset = 0;                   // Principal
    std::vector<std::vector<int>> blocks;   // Quotient
  };

  // Trials are drawn up front from one stream so sharding cannot change them.
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_graph = [&](int min_edges) {
    while (true) {
      const int n = uniform(2, 10);
      const double density = uniform(1, 9) / 10.0;
      std::bernoulli_distribution coin(density);
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) edges.emplace_back(u, v);
      if (static_cast<int>(edges.size()) >= min_edges) return Graph::from_edges(n, edges);
    }
  };
  std::vector<Trial> all;
  for (int k = 0; k < trials; ++k) {
    Trial tr{Kind::EdgeDeletion, random_graph(1), {}, 0, {}};
    const auto edges = tr.g.edges();
    tr.edge = edges[static_cast<std::size_t>(uniform(0, static_cast<int>(edges.size()) - 1))];
    all.push_back(std::move(tr));
  }
  for (int k = 0; k < trials; ++k) {
    Trial tr{Kind::Principal, random_graph(0), {}, 0, {}};
    while (tr.subset == 0) tr.subset = static_cast<VertexSet>(rng()) & tr.g.vertices();
    all.push_back(std::move(tr));
  }
  for (int k = 0; k < trials; ++k) {
    Trial tr{Kind::Quotient, random_graph(0), {}, 0, {}};
    const int n = tr.g.order();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const int blocks = uniform(1, n);
    // Cut the shuffled order at blocks - 1 distinct positions.
    std::vector<int> cuts(static_cast<std::size_t>(n - 1));
    for (int c = 0; c < n - 1; ++c) cuts[static_cast<std::size_t>(c)] = c + 1;
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(static_cast<std::size_t>(blocks - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    int start = 0;
    for (int cut : cuts) {
      tr.blocks.emplace_back(order.begin() + start, order.begin() + cut);
      start = cut;
    }
    all.push_back(std::move(tr));
  }

  // Two-sided interlacing of a k-vector inside an n-vector, both descending.
  auto interlaces = [](const std::vector<double>& big, const std::vector<double>& small) {
    const std::size_t n = big.size();
    const std::size_t k = small.size();
    for (std::size_t i = 0; i < k; ++i)
      if (small[i] > big[i] + kFloatTolerance || small[i] < big[n - k + i] - kFloatTolerance) return false;
    return true;
  };

  return run_sharded(
      "interlacing", "trials=" + std::to_string(trials) + " per kind, seed=" + std::to_string(seed),
      static_cast<long>(all.size()), shards, [&](long i, VerificationReport& r) {
        const Trial& tr = all[static_cast<std::size_t>(i)];
        const LaplacianMatrix l = laplacian(tr.g);
        const std::vector<double> mu = jacobi_eigenvalues(l.matrix().cast<double>());
        switch (tr.kind) {
          case Kind::EdgeDeletion: {
            const Graph h = delete_edge(tr.g, tr.edge.first, tr.edge.second);
            const std::vector<double> nu = jacobi_eigenvalues(laplacian(h).matrix().cast<double>());
            bool ok = true;
            for (std::size_t k = 0; k < mu.size(); ++k) ok = ok && nu[k] <= mu[k] + kFloatTolerance;
            r.tally("edge-deletion trials");
            r.check(ok, graph_item(tr.g) + " minus " + std::to_string(tr.edge.first) + "-" + std::to_string(tr.edge.second),
                    "mu_i(G - e) <= mu_i(G) for all i", format_values(nu) + " vs " + format_values(mu));
            break;
          }
          case Kind::Principal: {
            const PrincipalSubmatrix sub = principal_submatrix(l, tr.subset);
            const std::vector<double> theta = jacobi_eigenvalues(sub.block.cast<double>());
            r.tally("principal-submatrix trials");
            r.check(interlaces(mu, theta), graph_item(tr.g) + " subset " + std::to_string(tr.subset),
                    "two-sided interlacing", format_values(theta) + " in " + format_values(mu));
            break;
          }
          case Kind::Quotient: {
            const QuotientMatrix q = quotient_matrix(l, tr.blocks);
            const std::vector<double> theta = jacobi_eigenvalues(q.symmetrized());
            std::string blocks;
            for (const auto& b : tr.blocks) {
              blocks += blocks.empty() ? "" : "|";
              for (std::size_t k = 0; k < b.size(); ++k) blocks += (k ? "," : "") + std::to_string(b[k]);
            }
            r.tally("quotient trials");
            r.check(interlaces(mu, theta), graph_item(tr.g) + " blocks " + blocks, "two-sided interlacing",
                    format_values(theta) + " in " + format_values(mu));
            break;
          }
        }
      });
}

VerificationReport verify_exact_float(int n_max, int shards) {
  const std::vector<Graph> graphs = graphs_up_to(n_max, shards);
  return run_sharded("exact_float", range_n(n_max), static_cast<long>(graphs.size()), shards,
                     [&](long i, VerificationReport& r) {
    const Graph& g = graphs[static_cast<std::size_t>(i)];
    const int n = g.order();
    const LaplacianMatrix l = laplacian(g);
    const Spectrum s = eigenvalues_float(l);
    const ExactSpectrum exact(l);
    std::string observed;
    for (const auto& [t, k] : s.exact_roots) {
      const long near = std::count_if(s.values.begin(), s.values.end(),
                                      [&](double x) { return std::abs(x - static_cast<double>(t)) <= kFloatTolerance; });
      if (near != k) observed += "root " + std::to_string(t) + " x" + std::to_string(k) + " has " + std::to_string(near) + " floats; ";
    }
    for (int t = 0; t <= n; ++t) {
      const long above = std::count_if(s.values.begin(), s.values.end(), [&](double x) { return x > t + kTieBand; });
      const long at_least = std::count_if(s.values.begin(), s.values.end(), [&](double x) { return x >= t - kTieBand; });
      const int strict = exact.count_above(Rational(t));
      const int nonstrict = exact.count_at_least(Rational(t));
      if (above != at_least) r.tally("integer points inside the tie band");
      // Away from the band both counts are forced; inside it they are bracketed.
      if (strict < above || nonstrict > at_least || strict > nonstrict)
        observed += "t=" + std::to_string(t) + " sturm " + std::to_string(strict) + "/" + std::to_string(nonstrict) +
                    " float " + std::to_string(above) + "/" + std::to_string(at_least) + "; ";
    }
    r.check(observed.empty(), graph_item(g), "exact roots and Sturm counts agree with Jacobi", observed);
  });
}

VerificationReport verify_graph6_roundtrip(int n_max, int shards) {
  const std::vector<Graph> graphs = graphs_up_to(n_max, shards, 0);
  return run_sharded("roundtrip", range_n(n_max), static_cast<long>(graphs.size()), shards,
                     [&](long i, VerificationReport& r) {
    const Graph& g = graphs[static_cast<std::size_t>(i)];
    const std::string text = write_graph6(g);
    const Graph back = parse_graph6(text);
    r.check(back == g && write_graph6(back) == text, text, "identical graph and bytes", to_edge_string(back));
  });
}

std::vector<std::string_view> campaign_names() {
  return {"bh",        "equality_zero", "equality_one", "nexus",       "det_both_sides", "det_one_pendant",
          "quotient",  "cubic_f",       "interlacing",  "exact_float", "roundtrip"};
}

std::optional<VerificationReport> run_campaign(std::string_view name, const CampaignParams& p) {
  const int shards = p.shards;
  if (name == "bh") return verify_bh(p.n_max.value_or(8), shards);
  if (name == "equality_zero") return verify_equality_zero(p.n_max.value_or(8), shards);
  if (name == "equality_one") return verify_equality_one(p.n_max.value_or(8), shards);
  if (name == "nexus") return verify_nexus_classification(p.n_max.value_or(8), shards);
  if (name == "det_both_sides") return verify_det_lemma_both_sides(p.c_max.value_or(6), p.d_max.value_or(6), shards);
  if (name == "det_one_pendant") return verify_det_lemma_one_pendant(p.d_max.value_or(8), shards);
  if (name == "quotient")
    return verify_quotient_closed_form({p.e_max.value_or(3), p.m_max.value_or(8), p.r_max.value_or(12)}, shards);
  if (name == "cubic_f") return verify_cubic_f({p.e_max.value_or(5), 2, p.m_max.value_or(10)}, shards);
  if (name == "interlacing") return verify_interlacing(p.trials.value_or(500), p.seed, shards);
  if (name == "exact_float") return verify_exact_float(p.n_max.value_or(7), shards);
  if (name == "roundtrip") return verify_graph6_roundtrip(p.n_max.value_or(8), shards);
  return std::nullopt;
}

}  // namespace lapbound

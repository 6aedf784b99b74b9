#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lapbound {

struct Counterexample {
  std::string item;  // graph6 plus index, or a parameter tuple
  std::string expected;
  std::string observed;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string campaign;
  std::string range;
  long checked = 0;
  long passed = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  std::map<std::string, long> tallies;  // merged by addition, rendered after notes

  bool ok() const noexcept { return counterexamples.empty(); }

  void check(bool good, std::string item, std::string expected, std::string observed);
  void tally(const std::string& key, long amount = 1) { tallies[key] += amount; }

  // Pass counts and tallies add, counterexamples concatenate. Call
  // normalize() before output to fix the order.
  void merge(const VerificationReport& other);
  void normalize();
};

/// Runs work(i) for i in [0, items) over `shards` threads, shard s taking
/// i = s, s + shards, ...; each call writes only into the report it is given.
/// The merged, normalized result does not depend on `shards`.
VerificationReport run_sharded(std::string campaign, std::string range, long items, int shards,
                               const std::function<void(long, VerificationReport&)>& work);

VerificationReport verify_bh(int n_max, int shards = 1);
VerificationReport verify_equality_zero(int n_max, int shards = 1);
VerificationReport verify_equality_one(int n_max, int shards = 1);
VerificationReport verify_nexus_classification(int n_max, int shards = 1);
VerificationReport verify_det_lemma_both_sides(int c_max, int d_max, int shards = 1);
VerificationReport verify_det_lemma_one_pendant(int d_max, int shards = 1);

struct QuotientGrid {
  int e_max = 3;
  int m_max = 8;
  int r_max = 12;
};
VerificationReport verify_quotient_closed_form(const QuotientGrid& grid = {}, int shards = 1);

struct CubicGrid {
  int e_max = 5;
  int m_min = 2;
  int m_max = 10;
};
VerificationReport verify_cubic_f(const CubicGrid& grid = {}, int shards = 1);

/// Seeded random edge-deletion, principal-submatrix and quotient trials,
/// `trials` of each kind.
VerificationReport verify_interlacing(int trials, std::uint64_t seed, int shards = 1);

/// Exact integer eigenvalues and Sturm counts against Jacobi on every graph
/// with at most n_max vertices.
VerificationReport verify_exact_float(int n_max, int shards = 1);

/// graph6 write/parse round trip on every graph with at most n_max vertices.
VerificationReport verify_graph6_roundtrip(int n_max, int shards = 1);

/// Float eigenvalues of the 3x3 quotient R(e, m, t, r), ascending, via a
/// symmetric similarity (R is the quotient for block sizes t, m - t, r).
std::vector<double> quotient_r_eigenvalues(int e, int m, int t, int r);

struct CampaignParams {
  std::optional<int> n_max;
  std::optional<int> c_max;
  std::optional<int> d_max;
  std::optional<int> e_max;
  std::optional<int> m_max;
  std::optional<int> r_max;
  std::optional<int> trials;
  std::uint64_t seed = 0;
  int shards = 1;
};

std::vector<std::string_view> campaign_names();

/// Runs a campaign by name with its default ranges for unset parameters.
/// Returns nullopt for an unknown name; throws Error(InvalidParameter) for
/// ranges the campaign cannot run.
std::optional<VerificationReport> run_campaign(std::string_view name, const CampaignParams& params);

}  // namespace lapbound

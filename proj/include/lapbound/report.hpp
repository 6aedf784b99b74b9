#pragma once

#include <string>

#include "lapbound/analysis.hpp"
#include "lapbound/verify.hpp"

namespace lapbound {

/// Line-oriented "key: value" rendering ending in "status: PASS|FAIL".
std::string render_text(const VerificationReport& report);

/// Flat JSON object with "schema": 1, campaign, range, checked, passed,
/// counterexamples[], notes[], tallies and status.
std::string render_json(const VerificationReport& report);

/// The item of every counterexample, one per line (the graph6 string for
/// graph campaigns).
std::string render_items(const VerificationReport& report);

/// Per-m table: m, d_m, target, relation, mu_m, nexus count ("-" when the
/// graph has isolated vertices) and the exception flag.
std::string render_text(const Graph& g, const EqualityReport& report);
std::string render_json(const Graph& g, const EqualityReport& report);

}  // namespace lapbound

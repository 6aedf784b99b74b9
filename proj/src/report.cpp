#include "lapbound/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "lapbound/graph6.hpp"

namespace lapbound {

namespace {

using nlohmann::ordered_json;

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  // Avoid printing "-0.000000000" for tiny negative rounding noise.
  if (std::string(buf) == "-0.000000000") return "0.000000000";
  return buf;
}

std::vector<int> nexus_counts(const Graph& g) {
  std::vector<int> out;
  if (isolated_vertices(g) != 0) return out;
  for (int m = 1; m <= g.order(); ++m) out.push_back(static_cast<int>(find_nexuses(g, m).size()));
  return out;
}

}  // namespace

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "campaign: " << r.campaign << '\n';
  os << "range: " << r.range << '\n';
  os << "checked: " << r.checked << '\n';
  os << "passed: " << r.passed << '\n';
  os << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples)
    os << "counterexample: " << c.item << " | expected: " << c.expected << " | observed: " << c.observed << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  for (const auto& [key, value] : r.tallies) os << "tally: " << key << " = " << value << '\n';
  os << "status: " << (r.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render_json(const VerificationReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["campaign"] = r.campaign;
  j["range"] = r.range;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["counterexamples"] = ordered_json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back({{"item", c.item}, {"expected", c.expected}, {"observed", c.observed}});
  j["notes"] = r.notes;
  j["tallies"] = ordered_json::object();
  for (const auto& [key, value] : r.tallies) j["tallies"][key] = value;
  j["status"] = r.ok() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

std::string render_items(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.counterexamples) {
    const auto space = c.item.find(' ');
    out += c.item.front() == '(' ? c.item : c.item.substr(0, space);
    out += '\n';
  }
  return out;
}

std::string render_text(const Graph& g, const EqualityReport& report) {
  const std::vector<int> nexus = nexus_counts(g);
  std::ostringstream os;
  os << "graph6: " << write_graph6(g) << '\n';
  os << "n: " << report.n << '\n';
  os << "m\td_m\ttarget\trelation\tmu_m\tnexuses\texception\n";
  for (const EqualityRow& row : report.rows) {
    os << row.m << '\t' << row.d_m << '\t' << row.target << '\t' << to_string(row.relation) << '\t'
       << fixed(row.mu_float) << '\t';
    if (nexus.empty())
      os << '-';
    else
      os << nexus[static_cast<std::size_t>(row.m - 1)];
    os << '\t' << (row.exception ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string render_json(const Graph& g, const EqualityReport& report) {
  const std::vector<int> nexus = nexus_counts(g);
  ordered_json j;
  j["schema"] = 1;
  j["graph6"] = write_graph6(g);
  j["n"] = report.n;
  j["rows"] = ordered_json::array();
  for (const EqualityRow& row : report.rows) {
    ordered_json r;
    r["m"] = row.m;
    r["d_m"] = row.d_m;
    r["target"] = row.target;
    r["relation"] = std::string(to_string(row.relation));
    r["mu"] = std::stod(fixed(row.mu_float));
    r["nexuses"] = nexus.empty() ? ordered_json(nullptr) : ordered_json(nexus[static_cast<std::size_t>(row.m - 1)]);
    r["exception"] = row.exception;
    j["rows"].push_back(r);
  }
  return j.dump(2) + "\n";
}

}  // namespace lapbound

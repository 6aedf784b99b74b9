#include "lapbound/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "lapbound/analysis.hpp"
#include "lapbound/enumerate.hpp"
#include "lapbound/families.hpp"
#include "lapbound/graph6.hpp"
#include "lapbound/report.hpp"
#include "lapbound/spectral.hpp"
#include "lapbound/verify.hpp"

namespace lapbound {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

int to_int(const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "not an integer: '" + token + "'");
  }
  if (used != token.size()) throw Error(ErrorKind::Parse, "not an integer: '" + token + "'");
  return value;
}

/// "n u-v u-v ..." with 0-based vertices.
Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::string token;
  if (!(is >> token)) throw Error(ErrorKind::Parse, "empty edge list");
  const int n = to_int(token);
  if (n < 0) throw Error(ErrorKind::Parse, "negative vertex count");
  if (n > kMaxVertices) throw Error(ErrorKind::Capacity, "more than " + std::to_string(kMaxVertices) + " vertices");
  std::vector<Edge> edges;
  while (is >> token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0) throw Error(ErrorKind::Parse, "edge token '" + token + "' is not u-v");
    edges.emplace_back(to_int(token.substr(0, dash)), to_int(token.substr(dash + 1)));
  }
  return Graph::from_edges(n, edges);
}

/// graph6 never contains whitespace or digits, so either marks an edge list.
Graph parse_graph_text(const std::string& raw) {
  std::string text = trim(raw);
  if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty graph input");
  const bool edge_list = std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c) || std::isdigit(c); });
  return edge_list ? parse_edge_list(text) : parse_graph6(text);
}

std::string read_first_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line))
    if (!trim(line).empty()) return line;
  throw Error(ErrorKind::Parse, "no graph on input");
}

std::string format_spectrum(const std::vector<double>& values) {
  std::string out;
  char buf[64];
  for (double x : values) {
    std::snprintf(buf, sizeof buf, "%.9f", std::abs(x) < 5e-10 ? 0.0 : x);
    if (!out.empty()) out += ' ';
    out += buf;
  }
  return out;
}

int emit_report(const VerificationReport& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << render_json(report);
  else if (format == "graph6")
    out << render_items(report);
  else
    out << render_text(report);
  return report.ok() ? kExitOk : kExitCounterexample;
}

int cmd_analyze(const std::string& input, const std::string& file, const std::string& format, std::istream& in,
                std::ostream& out) {
  std::string text;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot read " + file);
    text = read_first_line(f);
  } else if (input == "-") {
    text = read_first_line(in);
  } else {
    text = input;
  }
  const Graph g = parse_graph_text(text);
  if (g.order() == 0) throw Error(ErrorKind::Parse, "analysis needs at least one vertex");
  const EqualityReport report = bh_report(g);
  out << (format == "json" ? render_json(g, report) : render_text(g, report));
  return kExitOk;
}

int cmd_scan(const std::string& input, const std::string& format, std::istream& in, std::ostream& out) {
  std::ifstream file;
  std::istream* src = &in;
  if (input != "-") {
    file.open(input);
    if (!file) throw UsageError("cannot read " + input);
    src = &file;
  }
  struct Hit {
    std::string graph6;
    int m;
    int target;
  };
  long graphs = 0;
  long bad = 0;
  std::map<int, std::array<long, 3>> histogram;  // m -> BELOW, EQUAL, ABOVE
  std::vector<Hit> equal_hits;
  std::vector<Hit> exceptions;
  std::string line;
  while (std::getline(*src, line)) {
    std::string text = trim(line);
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    if (text.empty()) continue;
    Graph g(0);
    try {
      g = parse_graph6(text);
    } catch (const Error&) {
      ++bad;
      continue;
    }
    if (g.order() == 0) {
      ++graphs;
      continue;
    }
    ++graphs;
    const std::string canonical = write_graph6(g);
    for (const EqualityRow& row : bh_report(g).rows) {
      ++histogram[row.m][static_cast<std::size_t>(row.relation)];
      if (row.relation == Relation::Equal) equal_hits.push_back({canonical, row.m, row.target});
      if (row.exception) exceptions.push_back({canonical, row.m, row.target});
    }
  }
  if (src->bad()) throw UsageError("error while reading input");

  if (format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["graphs"] = graphs;
    j["bad_lines"] = bad;
    j["histogram"] = ordered_json::array();
    for (const auto& [m, counts] : histogram)
      j["histogram"].push_back({{"m", m}, {"BELOW", counts[0]}, {"EQUAL", counts[1]}, {"ABOVE", counts[2]}});
    j["equal"] = ordered_json::array();
    for (const Hit& h : equal_hits) j["equal"].push_back({{"graph6", h.graph6}, {"m", h.m}, {"target", h.target}});
    j["exceptions"] = ordered_json::array();
    for (const Hit& h : exceptions) j["exceptions"].push_back({{"graph6", h.graph6}, {"m", h.m}});
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "graphs: " << graphs << '\n';
  out << "bad_lines: " << bad << '\n';
  out << "m\tBELOW\tEQUAL\tABOVE\n";
  for (const auto& [m, counts] : histogram) out << m << '\t' << counts[0] << '\t' << counts[1] << '\t' << counts[2] << '\n';
  for (const Hit& h : equal_hits) out << "EQUAL " << h.graph6 << " m=" << h.m << " target=" << h.target << '\n';
  for (const Hit& h : exceptions) out << "EXCEPTION " << h.graph6 << " m=" << h.m << '\n';
  return kExitOk;
}

/// The equality or determinant statement a family member witnesses.
std::string family_claim(const FamilySpec& spec, const Graph& g) {
  const LaplacianMatrix l = laplacian(g);
  auto equality = [&](int m, int target) {
    const EqualityRow row = bh_report(g).at(m);
    return "m=" + std::to_string(m) + " target=" + std::to_string(row.target) + " " +
           std::string(to_string(row.relation)) + (row.target == target ? "" : " (expected target " + std::to_string(target) + ")");
  };
  switch (spec.tag) {
    case FamilyTag::PendantOne:
      return spec.m == 1 ? equality(1, spec.p + 1) : equality(spec.m, 1);
    case FamilyTag::PendantAll:
      return equality(spec.m, spec.e + 1);
    case FamilyTag::CompleteBipartite2d:
      return equality(2, spec.d);
    case FamilyTag::ComplementFamily:
      return equality(spec.s + 2 * spec.t, 0);
    case FamilyTag::TwoK2Family:
      return equality(3, 0);
    case FamilyTag::EmptyFamily:
      return g.order() >= 2 ? equality(2, 0) : "none for a single vertex";
    case FamilyTag::K2dPendantsBoth: {
      const Integer det = det_shift(l, Integer(spec.c + spec.d));
      return "det((c+d)I - L) = " + det.get_str() + (det != 0 ? ", c+d is not an eigenvalue" : ", c+d is an eigenvalue");
    }
    case FamilyTag::K2dPendantOne: {
      const Integer det = det_shift(l, Integer(spec.d));
      const int cmp = ExactSpectrum(l).compare_mu(2, Rational(spec.d));
      return "det(dI - L) = " + det.get_str() + ", mu_2 " + (cmp > 0 ? ">" : cmp == 0 ? "=" : "<") + " d";
    }
  }
  return "";
}

int cmd_family(const std::string& tag_name, const std::vector<std::string>& raw_params, bool spectrum,
               const std::string& format, std::ostream& out) {
  const auto tag = family_tag_from_string(tag_name);
  if (!tag) throw UsageError("unknown family '" + tag_name + "'");
  std::vector<int> params;
  for (const auto& p : raw_params) params.push_back(to_int(p));
  const FamilySpec spec = make_spec(*tag, params);
  validate(spec);
  const Graph g = generate(spec);
  const std::string g6 = write_graph6(g);
  if (format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["family"] = describe(spec);
    j["graph6"] = g6;
    j["n"] = g.order();
    if (spectrum) {
      std::vector<double> values = eigenvalues_float(laplacian(g)).values;
      for (double& x : values)
        if (std::abs(x) < 5e-10) x = 0.0;
      j["spectrum"] = values;
      j["claim"] = family_claim(spec, g);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (format == "text") out << describe(spec) << '\n';
  out << g6 << '\n';
  if (spectrum) {
    out << "spectrum: " << format_spectrum(eigenvalues_float(laplacian(g)).values) << '\n';
    out << "claim: " << family_claim(spec, g) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(int n, int shards, const std::string& format, std::ostream& out) {
  if (n < 0 || n > 10) throw UsageError("enumerate supports 0 <= n <= 10");
  const std::vector<Graph> graphs = enumerate_graphs(n, shards);
  if (format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["n"] = n;
    j["count"] = graphs.size();
    j["graphs"] = ordered_json::array();
    for (const Graph& g : graphs) j["graphs"].push_back(write_graph6(g));
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian eigenvalue bound mu_m >= d_m - m + 2: exact analysis and verification", "lapbound"};
  app.require_subcommand(1);
  std::string format;
  const std::vector<std::string> formats = {"text", "json", "graph6"};

  auto* analyze = app.add_subcommand("analyze", "Per-m report for one graph (graph6 or \"n u-v ...\")");
  std::string analyze_input = "-";
  std::string analyze_file;
  analyze->add_option("input", analyze_input, "graph6 string, edge list, or - for standard input");
  analyze->add_option("--file", analyze_file, "Read the graph from the first line of a file");
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* scan = app.add_subcommand("scan", "Relation histogram over a stream of graph6 lines");
  std::string scan_input = "-";
  scan->add_option("input", scan_input, "File of graph6 lines, or - for standard input");
  scan->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* family = app.add_subcommand("family", "Generate a member of an extremal family");
  std::string family_tag;
  std::vector<std::string> family_params;
  bool family_spectrum = false;
  family->add_option("tag", family_tag, "Family name, e.g. PendantOne")->required();
  family->add_option("params", family_params, "Integer parameters in family order");
  family->add_flag("--spectrum", family_spectrum, "Append the spectrum and the exactly checked equality claim");
  family->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* enumerate = app.add_subcommand("enumerate", "All isomorphism classes on n vertices, as graph6");
  int enumerate_n = 0;
  int shards = 1;
  enumerate->add_option("n", enumerate_n, "Vertex count")->required();
  enumerate->add_option("--shards", shards, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  std::string campaign;
  CampaignParams params;
  verify->add_option("campaign", campaign, "Campaign name")->required();
  verify->add_option("--n-max", params.n_max, "Largest vertex count");
  verify->add_option("--c-max", params.c_max, "Largest c");
  verify->add_option("--d-max", params.d_max, "Largest d");
  verify->add_option("--e-max", params.e_max, "Largest e");
  verify->add_option("--m-max", params.m_max, "Largest m");
  verify->add_option("--r-max", params.r_max, "Largest r");
  verify->add_option("--trials", params.trials, "Random trials per kind");
  verify->add_option("--seed", params.seed, "Random seed");
  verify->add_option("--shards", params.shards, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_input, analyze_file, format, in, out);
    if (scan->parsed()) return cmd_scan(scan_input, format, in, out);
    if (family->parsed()) return cmd_family(family_tag, family_params, family_spectrum, format.empty() ? "graph6" : format, out);
    if (enumerate->parsed()) return cmd_enumerate(enumerate_n, shards, format, out);
    if (verify->parsed()) {
      const auto report = run_campaign(campaign, params);
      if (!report) {
        err << "unknown campaign '" << campaign << "'; known:";
        for (auto name : campaign_names()) err << ' ' << name;
        err << '\n';
        return kExitUsage;
      }
      return emit_report(*report, format, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lapbound

#include "abcmax/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "abcmax/bounds.hpp"
#include "abcmax/coloring.hpp"
#include "abcmax/connectivity.hpp"
#include "abcmax/enumeration.hpp"
#include "abcmax/families.hpp"
#include "abcmax/graph6.hpp"
#include "abcmax/invariants.hpp"
#include "abcmax/report.hpp"
#include "abcmax/verifier.hpp"

namespace abcmax {

namespace {

constexpr int kDefaultCellMax = 8;
constexpr int kMonotonicityOrderMax = 12;
constexpr int kBridgeOrderMax = 100;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text, "--n-range");
    return {n, n};
  }
  const int a = parse_int(std::string_view(text).substr(0, dots), "--n-range");
  const int b = parse_int(std::string_view(text).substr(dots + 2), "--n-range");
  if (a > b) throw UsageError("--n-range: empty range " + text);
  return {a, b};
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    parts.push_back(parse_int(rest.substr(0, comma), "--parts"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return parts;
}

// Rounds for JSON output so the printed value has `precision` decimals.
double rounded(double value, int precision) {
  const double scale = std::pow(10.0, precision);
  return std::round(value * scale) / scale;
}

nlohmann::json invariants_json(const Graph& g, int precision) {
  nlohmann::json j;
  j["g6"] = encode_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["abc"] = rounded(abc_index(g), precision);
  j["degree_sequence"] = degree_sequence(g);
  j["edge_connectivity"] = edge_connectivity(g);
  j["vertex_connectivity"] = vertex_connectivity(g);
  j["chromatic_number"] = chromatic_number(g).chi;
  return j;
}

struct Options {
  // construct
  std::string family;
  int n = 0;
  std::optional<int> k, l, x, y, chi;
  // invariants
  std::optional<std::string> g6;
  // enumerate
  bool connected = false;
  bool allow_long = false;
  // bound
  std::string which;
  std::optional<std::string> parts;
  bool literal = false;
  // verify
  std::string campaign;
  std::optional<std::string> n_range;
  double epsilon = 1e-9;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
  std::optional<std::string> out_file;
  std::string format = "json";
  int precision = 9;
};

int cmd_construct(const Options& o, std::ostream& out) {
  GraphFamily f;
  f.kind = parse_family_kind(o.family);
  f.n = o.n;
  if (f.kind == FamilyKind::kn_k) {
    if (!o.k) throw UsageError("construct --family knk needs --k");
    f.k = *o.k;
  }
  if (f.kind == FamilyKind::turan) {
    if (!o.l) throw UsageError("construct --family turan needs --l");
    f.l = *o.l;
  }
  if (f.kind == FamilyKind::bridge_cliques) {
    if (!o.x || !o.y) throw UsageError("construct --family bridge needs --x and --y");
    f.x = *o.x;
    f.y = *o.y;
  } else if (o.n == 0) {
    throw UsageError("construct needs --n");
  }
  out << encode_graph6(construct(f)) << '\n';
  return kExitOk;
}

int cmd_invariants(const Options& o, std::istream& in, std::ostream& out) {
  if (o.g6) {
    out << invariants_json(decode_graph6(*o.g6), o.precision).dump() << '\n';
    return kExitOk;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out << invariants_json(decode_graph6(line), o.precision).dump() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const EnumerationOptions eo{.allow_long = o.allow_long, .jobs = o.jobs};
  const auto graphs = o.connected ? connected_graphs(o.n, eo) : all_graphs(o.n, eo);
  for (const auto& g : graphs) out << encode_graph6(g) << '\n';
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const int p = o.precision;
  if (o.which == "thm1") {
    if (!o.k) throw UsageError("bound --which thm1 needs --k");
    out << format_fixed(theorem1_bound(o.n, *o.k, o.literal ? KRange::literal : KRange::extended), p)
        << '\n';
  } else if (o.which == "thm2") {
    out << format_fixed(theorem2_bound(o.n), p) << '\n';
  } else if (o.which == "cor3") {
    if (!o.chi) throw UsageError("bound --which cor3 needs --chi");
    out << format_fixed(corollary3_bound(o.n, *o.chi), p) << '\n';
  } else if (o.which == "cs") {
    if (!o.parts) throw UsageError("bound --which cs needs --parts");
    const PartitionProfile profile(parse_parts(*o.parts));
    if (o.n != 0 && o.n != profile.order()) {
      throw UsageError("--n does not match the sum of --parts");
    }
    const auto cs = cauchy_schwarz_bound(profile);
    out << format_fixed(cs.sum, p) << ' ' << format_fixed(cs.norm_product, p) << '\n';
  } else {
    throw UsageError("unknown bound '" + o.which + "'");
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& what = o.campaign;
  const bool cells = what == "edge-conn" || what == "vertex-conn" || what == "chromatic" || what == "all";
  if (o.k && what != "edge-conn" && what != "vertex-conn") {
    throw UsageError("--k applies to edge-conn and vertex-conn only");
  }
  if (o.chi && what != "chromatic") throw UsageError("--chi applies to chromatic only");
  if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
  if (!(o.epsilon > 0)) throw UsageError("--epsilon must be positive");

  std::pair<int, int> range;
  if (o.n_range) {
    range = parse_range(*o.n_range);
  } else if (what == "monotonicity") {
    range = {3, kMonotonicityOrderMax};
  } else if (what == "bridge") {
    range = {6, kBridgeOrderMax};
  } else {
    range = {4, kDefaultCellMax};
  }
  if (cells) {
    if (range.first < 1) throw UsageError("--n-range must start at 1 or above");
    if (range.second > kDefaultCellMax && !o.allow_long) {
      throw UsageError("orders above " + std::to_string(kDefaultCellMax) + " need --allow-long");
    }
    check_enumeration_order(range.second, o.allow_long);
  }

  VerifierOptions vo;
  vo.epsilon = o.epsilon;
  vo.jobs = o.jobs;
  vo.allow_long = o.allow_long;

  const auto start = std::chrono::steady_clock::now();
  Report report;
  if (cells) {
    CampaignSpec spec;
    spec.name = what;
    spec.n_min = range.first;
    spec.n_max = range.second;
    if (what == "edge-conn") spec.kinds = {ConstraintKind::edge_connectivity_eq};
    if (what == "vertex-conn") spec.kinds = {ConstraintKind::vertex_connectivity_eq};
    if (what == "chromatic") spec.kinds = {ConstraintKind::chromatic_eq};
    if (what == "all") {
      spec.kinds = {ConstraintKind::edge_connectivity_eq, ConstraintKind::vertex_connectivity_eq,
                    ConstraintKind::chromatic_eq};
    }
    spec.value = what == "chromatic" ? o.chi : o.k;
    report = run_campaign(spec, vo);
  } else {
    report.campaign = what;
    report.parameters.n_min = range.first;
    report.parameters.n_max = range.second;
    report.parameters.epsilon = o.epsilon;
    report.parameters.allow_long = o.allow_long;
  }
  if (what == "monotonicity" || what == "all") {
    const int n_max = what == "all" ? kMonotonicityOrderMax : range.second;
    report.parameters.seed = o.seed;
    report.parameters.trials = o.trials;
    report.properties.push_back(verify_monotonicity(o.trials, n_max, o.seed));
  }
  if (what == "bridge" || what == "all") {
    const int n_max = what == "all" ? kBridgeOrderMax : range.second;
    for (auto& p : verify_bridge_rewrite(n_max)) report.properties.push_back(std::move(p));
    report.properties.push_back(verify_s_convexity());
  }
  report.run.jobs = o.jobs;
  report.run.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = o.format == "csv" ? to_csv(report) : to_json_text(report);
  if (o.out_file) {
    std::ofstream file(*o.out_file, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + *o.out_file);
    file << text;
  } else {
    out << text;
  }

  const auto failures = report.failures();
  err << what << ": " << report.cells.size() << " cell(s), " << report.properties.size()
      << " propert(ies), " << report.total_scanned() << " graph(s) scanned, "
      << failures.size() << " failure(s)\n";
  for (const auto& f : failures) err << "  FAIL " << f << '\n';
  return failures.empty() ? kExitOk : kExitMustMatchFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"ABC index extremal-graph toolkit", "abcmax"};
  app.require_subcommand(1);
  Options o;
  o.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  auto* construct = app.add_subcommand("construct", "print a named graph as graph6");
  construct->add_option("--family", o.family, "complete|knk|turan|bridge|cycle|path|star|empty")
      ->required()
      ->check(CLI::IsMember({"complete", "knk", "turan", "bridge", "cycle", "path", "star", "empty"}));
  construct->add_option("--n", o.n, "order");
  construct->add_option("--k", o.k, "join size for knk");
  construct->add_option("--l", o.l, "part count for turan");
  construct->add_option("--x", o.x, "first clique for bridge");
  construct->add_option("--y", o.y, "second clique for bridge");

  auto* invariants = app.add_subcommand("invariants", "invariants of graph6 input as JSON lines");
  invariants->add_option("--g6", o.g6, "graph6 text; reads lines from stdin when absent");
  invariants->add_option("--precision", o.precision, "decimals for abc")->check(CLI::Range(0, 17));

  auto* enumerate = app.add_subcommand("enumerate", "stream graphs of order n as graph6");
  enumerate->add_option("--n", o.n, "order")->required();
  enumerate->add_flag("--connected", o.connected, "connected graphs only");
  enumerate->add_flag("--allow-long", o.allow_long, "permit order 10");
  enumerate->add_option("--jobs", o.jobs, "worker threads");

  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound");
  bound->add_option("--which", o.which, "thm1|thm2|cor3|cs")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "cor3", "cs"}));
  bound->add_option("--n", o.n, "order");
  bound->add_option("--k", o.k, "edge-connectivity (thm1)");
  bound->add_option("--chi", o.chi, "chromatic number (cor3)");
  bound->add_option("--parts", o.parts, "colour-class sizes t1,t2,... (cs)");
  bound->add_flag("--literal", o.literal, "thm1: reject k = 1");
  bound->add_option("--precision", o.precision, "decimals")->check(CLI::Range(0, 17));

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("campaign", o.campaign, "edge-conn|vertex-conn|chromatic|monotonicity|bridge|all")
      ->required()
      ->check(CLI::IsMember({"edge-conn", "vertex-conn", "chromatic", "monotonicity", "bridge", "all"}));
  verify->add_option("--n-range", o.n_range, "orders A..B");
  verify->add_option("--k", o.k, "fixed connectivity value");
  verify->add_option("--chi", o.chi, "fixed chromatic number");
  verify->add_option("--epsilon", o.epsilon, "tie band")->capture_default_str();
  verify->add_option("--jobs", o.jobs, "worker threads");
  verify->add_option("--seed", o.seed, "monotonicity seed");
  verify->add_option("--trials", o.trials, "monotonicity trials");
  verify->add_option("--out", o.out_file, "report file (stdout when absent)");
  verify->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--allow-long", o.allow_long, "permit orders 9 and 10");
  verify->add_option("--precision", o.precision, "decimals in CSV")->check(CLI::Range(0, 17));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (invariants->parsed()) return cmd_invariants(o, in, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (bound->parsed()) return cmd_bound(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace abcmax

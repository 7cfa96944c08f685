#include "abcmax/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abcmax {

using nlohmann::json;

void validate(const ConstraintSpec& c) {
  switch (c.kind) {
    case ConstraintKind::none: return;
    case ConstraintKind::edge_connectivity_eq:
    case ConstraintKind::vertex_connectivity_eq:
      if (c.value < 1) throw std::invalid_argument("connectivity constraint needs value >= 1");
      return;
    case ConstraintKind::chromatic_eq:
      if (c.value < 2) throw std::invalid_argument("chromatic constraint needs value >= 2");
      return;
  }
}

std::string_view to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::none: return "none";
    case ConstraintKind::edge_connectivity_eq: return "edge_connectivity_eq";
    case ConstraintKind::vertex_connectivity_eq: return "vertex_connectivity_eq";
    case ConstraintKind::chromatic_eq: return "chromatic_eq";
  }
  return "?";
}

ConstraintKind parse_constraint_kind(std::string_view text) {
  for (auto k : {ConstraintKind::none, ConstraintKind::edge_connectivity_eq,
                 ConstraintKind::vertex_connectivity_eq, ConstraintKind::chromatic_eq}) {
    if (text == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown constraint kind '" + std::string(text) + "'");
}

std::string_view to_string(CellStatus status) {
  return status == CellStatus::must_match ? "must-match" : "evidence";
}

std::uint64_t Report::total_scanned() const {
  std::uint64_t total = 0;
  for (const auto& c : cells) total += c.scanned;
  return total;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : cells) {
    if (c.status == CellStatus::must_match && c.verdict != "pass") {
      std::string line = "n=" + std::to_string(c.n) + " " + std::string(to_string(c.constraint.kind)) +
                         "=" + std::to_string(c.constraint.value) + ": " + c.verdict;
      if (!c.maximizers.empty()) {
        line += " maximizers:";
        for (const auto& m : c.maximizers) line += " " + m;
      }
      out.push_back(std::move(line));
    }
  }
  for (const auto& p : properties) {
    if (!p.passed()) {
      std::string line = p.name + ": " + std::to_string(p.violations) + " violation(s)";
      for (const auto& w : p.witnesses) line += " " + w;
      out.push_back(std::move(line));
    }
  }
  return out;
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

json cell_json(const ExtremalResult& c) {
  json j;
  j["n"] = c.n;
  j["constraint"] = {{"kind", to_string(c.constraint.kind)}, {"value", c.constraint.value}};
  j["status"] = to_string(c.status);
  j["scanned"] = c.scanned;
  j["max_value"] = opt(c.max_value);
  j["maximizers"] = c.maximizers;
  j["predicted"] = opt(c.predicted);
  j["matches"] = c.matches;
  j["near_ties"] = c.near_ties;
  j["runner_up_gap"] = opt(c.runner_up_gap);
  j["bound"] = opt(c.bound);
  j["constraint_verified"] = c.constraint_verified;
  j["verdict"] = c.verdict;
  return j;
}

ExtremalResult cell_from(const json& j) {
  ExtremalResult c;
  c.n = j.at("n").get<int>();
  c.constraint.kind = parse_constraint_kind(j.at("constraint").at("kind").get<std::string>());
  c.constraint.value = j.at("constraint").at("value").get<int>();
  const auto status = j.at("status").get<std::string>();
  if (status != "must-match" && status != "evidence") {
    throw std::invalid_argument("unknown cell status '" + status + "'");
  }
  c.status = status == "must-match" ? CellStatus::must_match : CellStatus::evidence;
  c.scanned = j.at("scanned").get<std::uint64_t>();
  c.max_value = get_opt<double>(j, "max_value");
  c.maximizers = j.at("maximizers").get<std::vector<std::string>>();
  c.predicted = get_opt<std::string>(j, "predicted");
  c.matches = j.at("matches").get<bool>();
  c.near_ties = j.at("near_ties").get<std::vector<std::string>>();
  c.runner_up_gap = get_opt<double>(j, "runner_up_gap");
  c.bound = get_opt<double>(j, "bound");
  c.constraint_verified = j.at("constraint_verified").get<bool>();
  c.verdict = j.at("verdict").get<std::string>();
  return c;
}

json property_json(const PropertySummary& p) {
  return {{"name", p.name},         {"checks", p.checks},       {"violations", p.violations},
          {"min_gap", opt(p.min_gap)}, {"witnesses", p.witnesses}, {"note", p.note},
          {"passed", p.passed()}};
}

PropertySummary property_from(const json& j) {
  PropertySummary p;
  p.name = j.at("name").get<std::string>();
  p.checks = j.at("checks").get<std::uint64_t>();
  p.violations = j.at("violations").get<std::uint64_t>();
  p.min_gap = get_opt<double>(j, "min_gap");
  p.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  p.note = j.at("note").get<std::string>();
  return p;
}

json deterministic_part(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["campaign"] = r.campaign;
  const auto& p = r.parameters;
  j["parameters"] = {{"n_min", p.n_min},       {"n_max", p.n_max},
                     {"k", opt(p.k)},          {"chi", opt(p.chi)},
                     {"epsilon", p.epsilon},   {"seed", p.seed},
                     {"trials", p.trials},     {"allow_long", p.allow_long},
                     {"predictions", p.predictions}};
  j["cells"] = json::array();
  for (const auto& c : r.cells) j["cells"].push_back(cell_json(c));
  j["properties"] = json::array();
  for (const auto& pr : r.properties) j["properties"].push_back(property_json(pr));
  j["totals"] = {{"scanned", r.total_scanned()},
                 {"cells", r.cells.size()},
                 {"properties", r.properties.size()},
                 {"failures", r.failures()}};
  return j;
}

std::string csv_optional(const std::optional<double>& v) { return v ? format_fixed(*v) : ""; }

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

json to_json(const Report& r) {
  json j = deterministic_part(r);
  j["run"] = {{"jobs", r.run.jobs}, {"wall_time_s", r.run.wall_time_s}};
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  if (r.schema_version != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported report schema " + r.schema_version);
  }
  r.campaign = j.at("campaign").get<std::string>();
  const auto& p = j.at("parameters");
  r.parameters.n_min = p.at("n_min").get<int>();
  r.parameters.n_max = p.at("n_max").get<int>();
  r.parameters.k = get_opt<int>(p, "k");
  r.parameters.chi = get_opt<int>(p, "chi");
  r.parameters.epsilon = p.at("epsilon").get<double>();
  r.parameters.seed = p.at("seed").get<std::uint64_t>();
  r.parameters.trials = p.at("trials").get<std::uint64_t>();
  r.parameters.allow_long = p.at("allow_long").get<bool>();
  r.parameters.predictions = p.at("predictions").get<bool>();
  for (const auto& c : j.at("cells")) r.cells.push_back(cell_from(c));
  for (const auto& pr : j.at("properties")) r.properties.push_back(property_from(pr));
  if (j.contains("run")) {
    r.run.jobs = j.at("run").at("jobs").get<int>();
    r.run.wall_time_s = j.at("run").at("wall_time_s").get<double>();
  }
  return r;
}

std::string to_json_text(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string deterministic_json_text(const Report& r) { return deterministic_part(r).dump(2) + "\n"; }

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "row,n,constraint,value,status,scanned,max_value,matches,maximizer_count,runner_up_gap,"
         "bound,verdict,maximizers,predicted,checks,violations,min_gap\n";
  for (const auto& c : r.cells) {
    out << "cell," << c.n << ',' << to_string(c.constraint.kind) << ',' << c.constraint.value << ','
        << to_string(c.status) << ',' << c.scanned << ',' << csv_optional(c.max_value) << ','
        << (c.matches ? "true" : "false") << ',' << c.maximizers.size() << ','
        << csv_optional(c.runner_up_gap) << ',' << csv_optional(c.bound) << ',' << c.verdict << ','
        << joined(c.maximizers) << ',' << c.predicted.value_or("") << ",,,\n";
  }
  for (const auto& p : r.properties) {
    out << "property,," << p.name << ",,,,,,,,," << (p.passed() ? "pass" : "fail") << ",,,"
        << p.checks << ',' << p.violations << ',' << csv_optional(p.min_gap) << '\n';
  }
  return out.str();
}

std::string format_fixed(double value, int precision) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
  if (res.ec != std::errc{}) throw std::runtime_error("format_fixed: value too long");
  return std::string(buf, res.ptr);
}

}  // namespace abcmax

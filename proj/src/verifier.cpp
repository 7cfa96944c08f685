#include "abcmax/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "abcmax/bounds.hpp"
#include "abcmax/canonical.hpp"
#include "abcmax/coloring.hpp"
#include "abcmax/connectivity.hpp"
#include "abcmax/enumeration.hpp"
#include "abcmax/families.hpp"
#include "abcmax/graph6.hpp"
#include "abcmax/invariants.hpp"

namespace abcmax {

namespace {

using Extended = boost::multiprecision::cpp_dec_float_50;

// Values this close in 50-digit arithmetic are a genuine tie.
const Extended kExtendedTie("1e-30");

struct Candidate {
  double value;
  Graph graph;
};

// Running maximum with every graph inside the tie band [max - eps, max] and
// the best value below it. The final band and runner-up depend only on the
// multiset of inputs, so partial accumulators merge in any order.
class CellAccumulator {
 public:
  explicit CellAccumulator(double epsilon) : epsilon_(epsilon) {}

  void add(double value, const Graph& g) {
    ++scanned_;
    insert(value, g);
  }

  void merge(CellAccumulator&& other) {
    scanned_ += other.scanned_;
    for (auto& c : other.band_) insert(c.value, c.graph);
    if (other.best_outside_) push_outside(*other.best_outside_);
  }

  std::uint64_t scanned() const { return scanned_; }
  const std::vector<Candidate>& band() const { return band_; }
  std::optional<double> best_outside() const { return best_outside_; }

 private:
  void insert(double value, const Graph& g) {
    if (band_.empty() || value > max_) {
      max_ = value;
      const double floor = max_ - epsilon_;
      auto keep = std::partition(band_.begin(), band_.end(),
                                 [&](const Candidate& c) { return c.value >= floor; });
      for (auto it = keep; it != band_.end(); ++it) push_outside(it->value);
      band_.erase(keep, band_.end());
    }
    if (value >= max_ - epsilon_) {
      band_.push_back({value, g});
    } else {
      push_outside(value);
    }
  }

  void push_outside(double value) {
    if (!best_outside_ || value > *best_outside_) best_outside_ = value;
  }

  double epsilon_;
  double max_ = -std::numeric_limits<double>::infinity();
  std::uint64_t scanned_ = 0;
  std::vector<Candidate> band_;
  std::optional<double> best_outside_;
};

// Per-graph constraint evaluation, each invariant computed at most once.
class ConstraintEvaluator {
 public:
  explicit ConstraintEvaluator(std::span<const ConstraintSpec> cells) : cells_(cells) {
    for (const auto& c : cells) {
      if (c.kind == ConstraintKind::chromatic_eq) chi_values_.insert(c.value);
    }
  }

  // Sets hits[i] for each cell the graph belongs to.
  void evaluate(const Graph& g, std::vector<char>& hits) {
    std::optional<int> lambda, kappa, chi;
    const std::vector<int> deg = g.degrees();
    const int min_deg = *std::min_element(deg.begin(), deg.end());
    std::map<int, bool> chi_exact;  // value -> chi(g) == value, single-value campaigns
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const auto& c = cells_[i];
      bool hit = false;
      switch (c.kind) {
        case ConstraintKind::none: hit = true; break;
        case ConstraintKind::edge_connectivity_eq:
          // lambda <= min degree, so a small minimum degree settles it.
          if (min_deg < c.value) break;
          if (!lambda) lambda = edge_connectivity(g);
          hit = *lambda == c.value;
          break;
        case ConstraintKind::vertex_connectivity_eq:
          if (min_deg < c.value) break;
          if (!kappa) kappa = vertex_connectivity(g);
          hit = *kappa == c.value;
          break;
        case ConstraintKind::chromatic_eq:
          if (chi_values_.size() == 1) {
            auto it = chi_exact.find(c.value);
            if (it == chi_exact.end()) {
              const bool exact = is_k_colorable(g, c.value) && !is_k_colorable(g, c.value - 1);
              it = chi_exact.emplace(c.value, exact).first;
            }
            hit = it->second;
          } else {
            if (!chi) chi = chromatic_number(g).chi;
            hit = *chi == c.value;
          }
          break;
      }
      hits[i] = hit ? 1 : 0;
    }
  }

 private:
  std::span<const ConstraintSpec> cells_;
  std::set<int> chi_values_;
};

ExtremalResult finalize(int n, const ConstraintSpec& c, const CellAccumulator& acc,
                        const VerifierOptions& opts) {
  ExtremalResult r;
  r.n = n;
  r.constraint = c;
  r.status = opts.predictions ? cell_status(n, c) : CellStatus::evidence;
  r.scanned = acc.scanned();
  r.bound = cell_bound(n, c);
  std::optional<Graph> predicted = opts.predictions ? predicted_extremal(n, c) : std::nullopt;
  if (predicted) r.predicted = encode_graph6(canonical_graph(*predicted));

  if (r.scanned == 0) {
    r.verdict = r.status == CellStatus::must_match ? "fail" : "empty";
    return r;
  }

  // Re-evaluate the whole tie band in 50-digit arithmetic.
  const auto& band = acc.band();
  std::vector<Extended> precise;
  precise.reserve(band.size());
  for (const auto& cand : band) precise.push_back(abc_index<Extended>(cand.graph));
  const Extended top = *std::max_element(precise.begin(), precise.end());

  std::vector<std::pair<std::string, double>> winners;
  std::optional<Extended> runner_up;
  for (std::size_t i = 0; i < band.size(); ++i) {
    if (top - precise[i] <= kExtendedTie) {
      winners.emplace_back(encode_graph6(band[i].graph), band[i].value);
    } else {
      r.near_ties.push_back(encode_graph6(band[i].graph));
      if (!runner_up || precise[i] > *runner_up) runner_up = precise[i];
    }
  }
  if (acc.best_outside()) {
    const Extended outside(*acc.best_outside());
    if (!runner_up || outside > *runner_up) runner_up = outside;
  }
  std::sort(winners.begin(), winners.end());
  std::sort(r.near_ties.begin(), r.near_ties.end());
  for (const auto& w : winners) r.maximizers.push_back(w.first);
  r.max_value = winners.front().second;
  if (runner_up) r.runner_up_gap = static_cast<double>(top - *runner_up);

  r.constraint_verified = std::all_of(r.maximizers.begin(), r.maximizers.end(), [&](const auto& g6) {
    return satisfies(decode_graph6(g6), c);
  });
  r.matches = predicted && r.maximizers.size() == 1 &&
              are_isomorphic(decode_graph6(r.maximizers.front()), *predicted);

  if (r.status == CellStatus::must_match) {
    const bool gap_ok = !r.runner_up_gap || *r.runner_up_gap > opts.epsilon;
    const bool bound_ok = !r.bound || std::abs(*r.max_value - *r.bound) <= kBoundTolerance;
    r.verdict = r.matches && gap_ok && bound_ok && r.constraint_verified ? "pass" : "fail";
  } else if (!predicted) {
    r.verdict = "observed";
  } else {
    r.verdict = r.matches ? "confirmed" : "refuted";
  }
  return r;
}

}  // namespace

std::optional<Graph> predicted_extremal(int n, const ConstraintSpec& c) {
  switch (c.kind) {
    case ConstraintKind::none: return complete_graph(n);
    case ConstraintKind::edge_connectivity_eq:
    case ConstraintKind::vertex_connectivity_eq:
      if (n >= 2 && c.value >= 1 && c.value <= n - 1) return kn_k(n, c.value);
      return std::nullopt;
    case ConstraintKind::chromatic_eq:
      if (c.value >= 2 && c.value <= n) return turan(n, c.value);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> cell_bound(int n, const ConstraintSpec& c) {
  switch (c.kind) {
    case ConstraintKind::none:
      if (n >= 2) return abc_complete(n);
      return std::nullopt;
    case ConstraintKind::edge_connectivity_eq:
    case ConstraintKind::vertex_connectivity_eq:
      if (n >= 6 && c.value >= 1 && c.value <= n - 2) return theorem1_bound(n, c.value);
      return std::nullopt;
    case ConstraintKind::chromatic_eq:
      if (c.value == 2 && n >= 2) return theorem2_bound(n);
      if (c.value >= 3 && c.value <= n && n % c.value == 0) return corollary3_bound(n, c.value);
      return std::nullopt;
  }
  return std::nullopt;
}

CellStatus cell_status(int n, const ConstraintSpec& c) {
  const int v = c.value;
  bool proven = false;
  switch (c.kind) {
    case ConstraintKind::none: proven = true; break;
    case ConstraintKind::edge_connectivity_eq:
      proven = (v == 1 && n >= 3) || (v >= 2 && v <= n - 2 && n >= 6);
      break;
    case ConstraintKind::vertex_connectivity_eq:
      proven = (v == 1 && n >= 3) || (v >= 2 && v <= n - 2 && n >= 5);
      break;
    case ConstraintKind::chromatic_eq:
      proven = (v == 2 && n >= 2) || (v >= 3 && v <= n && n % v == 0);
      break;
  }
  return proven ? CellStatus::must_match : CellStatus::evidence;
}

bool satisfies(const Graph& g, const ConstraintSpec& c) {
  if (!is_connected(g)) return false;
  switch (c.kind) {
    case ConstraintKind::none: return true;
    case ConstraintKind::edge_connectivity_eq: return edge_connectivity(g) == c.value;
    case ConstraintKind::vertex_connectivity_eq: return vertex_connectivity(g) == c.value;
    case ConstraintKind::chromatic_eq: return chromatic_number(g).chi == c.value;
  }
  return false;
}

std::vector<ExtremalResult> scan_cells(int n, std::span<const ConstraintSpec> cells,
                                       const VerifierOptions& opts) {
  check_enumeration_order(n, opts.allow_long);
  for (const auto& c : cells) validate(c);
  const int jobs = std::max(1, opts.jobs);

  auto fresh = [&] {
    return std::vector<CellAccumulator>(cells.size(), CellAccumulator(opts.epsilon));
  };
  std::vector<std::vector<CellAccumulator>> per_worker(jobs, fresh());
  std::vector<ConstraintEvaluator> evaluators(jobs, ConstraintEvaluator(cells));
  std::vector<std::vector<char>> hits(jobs, std::vector<char>(cells.size()));

  auto process = [&](int worker, const Graph& g) {
    evaluators[worker].evaluate(g, hits[worker]);
    std::optional<double> value;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!hits[worker][i]) continue;
      if (!value) value = abc_index(g);
      per_worker[worker][i].add(*value, g);
    }
  };

  if (n == 1) {
    process(0, Graph(1));
  } else {
    const auto parents = connected_graphs(n - 1, {.allow_long = opts.allow_long, .jobs = jobs});
    parallel_chunks(parents.size(), jobs, [&](int worker, std::size_t first, std::size_t last) {
      for (std::size_t i = first; i < last; ++i) {
        for_each_child(parents[i], [&](const Graph& g) { process(worker, g); });
      }
    });
  }

  auto merged = fresh();
  for (auto& worker : per_worker) {
    for (std::size_t i = 0; i < cells.size(); ++i) merged[i].merge(std::move(worker[i]));
  }
  std::vector<ExtremalResult> out;
  out.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) out.push_back(finalize(n, cells[i], merged[i], opts));
  return out;
}

ExtremalResult find_maximizer(int n, const ConstraintSpec& c, const VerifierOptions& opts) {
  return scan_cells(n, std::span(&c, 1), opts).front();
}

Report run_campaign(const CampaignSpec& spec, const VerifierOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.campaign = spec.name;
  auto& p = report.parameters;
  p.n_min = spec.n_min;
  p.n_max = spec.n_max;
  p.epsilon = opts.epsilon;
  p.allow_long = opts.allow_long;
  p.predictions = opts.predictions;
  for (auto kind : spec.kinds) {
    if (kind == ConstraintKind::chromatic_eq) {
      p.chi = spec.value;
    } else if (kind != ConstraintKind::none) {
      p.k = spec.value;
    }
  }

  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    std::vector<ConstraintSpec> cells;
    for (auto kind : spec.kinds) {
      if (kind == ConstraintKind::none) {
        cells.push_back({kind, 0});
        continue;
      }
      const int lo = kind == ConstraintKind::chromatic_eq ? 2 : 1;
      const int hi = kind == ConstraintKind::chromatic_eq ? n : n - 1;
      if (spec.value) {
        cells.push_back({kind, *spec.value});
      } else {
        for (int v = lo; v <= hi; ++v) cells.push_back({kind, v});
      }
    }
    if (cells.empty()) continue;
    auto results = scan_cells(n, cells, opts);
    report.cells.insert(report.cells.end(), results.begin(), results.end());
  }

  report.run.jobs = std::max(1, opts.jobs);
  report.run.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

PropertySummary verify_monotonicity(std::uint64_t trials, int n_max, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_monotonicity: trials must be >= 1");
  if (n_max < 3 || n_max > 64) throw std::invalid_argument("verify_monotonicity: need 3 <= n_max <= 64");

  constexpr int kUniformClassLimit = 7;
  PropertySummary out;
  out.name = "edge_addition_monotonicity";
  out.note = "orders uniform in [3," + std::to_string(n_max) +
             "]; n<=7 uniform over isomorphism classes, larger n G(n,1/2) conditioned on "
             "connectivity; uniform non-edge; seed " +
             std::to_string(seed);

  std::mt19937_64 rng(seed);
  std::map<int, std::vector<Graph>> classes;
  std::uniform_int_distribution<int> pick_order(3, n_max);
  std::bernoulli_distribution coin(0.5);

  for (std::uint64_t t = 0; t < trials; ++t) {
    const int n = pick_order(rng);
    std::optional<Graph> g;
    while (!g || g->is_complete()) {
      if (n <= kUniformClassLimit) {
        auto& pool = classes[n];
        if (pool.empty()) pool = connected_graphs(n);
        g = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      } else {
        Graph h(n);
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) h.insert_edge(u, v);
          }
        }
        if (is_connected(h)) g = std::move(h);
      }
    }
    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!g->adjacent(u, v)) non_edges.emplace_back(u, v);
      }
    }
    const auto [u, v] =
        non_edges[std::uniform_int_distribution<std::size_t>(0, non_edges.size() - 1)(rng)];
    const double gain = abc_index(add_edge(*g, u, v)) - abc_index(*g);
    ++out.checks;
    if (!out.min_gap || gain < *out.min_gap) out.min_gap = gain;
    if (!(gain > kStrictGap)) {
      ++out.violations;
      out.witnesses.push_back(encode_graph6(*g) + " +{" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
    }
  }
  return out;
}

namespace {

void record(PropertySummary& p, double gap, bool ok, const std::string& witness) {
  ++p.checks;
  if (!p.min_gap || gap < *p.min_gap) p.min_gap = gap;
  if (!ok) {
    ++p.violations;
    if (p.witnesses.size() < 20) p.witnesses.push_back(witness);
  }
}

std::string xy(int x, int y) { return "x=" + std::to_string(x) + ",y=" + std::to_string(y); }

}  // namespace

std::vector<PropertySummary> verify_bridge_rewrite(int n_max) {
  if (n_max < 6) throw std::invalid_argument("verify_bridge_rewrite: need n_max >= 6");

  PropertySummary improve{.name = "bridge_rewrite_improves",
                          .note = "ABC(B(x-1,y+1)) - ABC(B(x,y)) > 1e-12, 3 <= x <= n/2"};
  PropertySummary x2{.name = "bridge_x2_improves", .note = "ABC(B(1,n-1)) - ABC(B(2,n-2)) > 1e-12"};
  PropertySummary decomposition{.name = "bridge_s_decomposition",
                                .note = "|ABC(B(x,y)) - s(x-1) - f(x,y) - s(y-1)| <= 1e-9"};
  PropertySummary karamata{.name = "karamata_step",
                           .note = "s(y) + s(x-2) >= s(y-1) + s(x-1) via majorization"};
  PropertySummary f_step{.name = "f_rewrite_positive",
                         .note = "f(x-1,y+1) - f(x,y) > 1e-12 for 3 <= x <= y <= 1000"};
  PropertySummary chain{.name = "chain_ends_at_kn1", .note = "B(1,n-1) is K_n(1)"};

  const std::function<double(double)> s = [](double z) { return s_value(z); };
  for (int n = 4; n <= n_max; ++n) {
    std::vector<double> abc_by_x(n / 2 + 1);
    for (int x = 1; x <= n / 2; ++x) abc_by_x[x] = abc_index(bridge_cliques(x, n - x));

    record(x2, abc_by_x[1] - abc_by_x[2], abc_by_x[1] - abc_by_x[2] > kStrictGap, xy(2, n - 2));

    for (int x = 2; x <= n / 2; ++x) {
      const int y = n - x;
      const double closed = s_value(double(x - 1)) + f_abc(x, y) + s_value(double(y - 1));
      const double err = std::abs(abc_by_x[x] - closed);
      record(decomposition, -err, err <= kBoundTolerance, xy(x, y));
    }
    for (int x = 3; x <= n / 2; ++x) {
      const int y = n - x;
      const double gain = abc_by_x[x - 1] - abc_by_x[x];
      record(improve, gain, gain > kStrictGap, xy(x, y));

      Vector<double> a(2), b(2);
      a << y, x - 2;
      b << y - 1, x - 1;
      const auto kr = karamata_check(a, b, s);
      record(karamata, kr.lhs - kr.rhs, kr.ok(), xy(x, y));
    }

    const Graph bridge = bridge_cliques(1, n - 1);
    std::vector<int> swap01(n);
    for (int v = 0; v < n; ++v) swap01[v] = v;
    std::swap(swap01[0], swap01[1]);
    bool same = relabel(bridge, swap01) == kn_k(n, 1);
    if (n <= kMaxCanonicalOrder) same = same && are_isomorphic(bridge, kn_k(n, 1));
    record(chain, 0.0, same, "n=" + std::to_string(n));
  }
  for (int x = 3; x <= 1000; ++x) {
    for (int y = x; y <= 1000; ++y) {
      const double d = f_rewrite_inequality(x, y);
      record(f_step, d, d > kStrictGap, xy(x, y));
    }
  }
  return {improve, x2, decomposition, karamata, f_step, chain};
}

PropertySummary verify_s_convexity(double z_max) {
  PropertySummary out{.name = "s_convexity",
                      .note = "s''(z) > 0, second central difference > 0 and the cleared-denominator "
                              "polynomial > 0 on a log grid in (1, " +
                              format_fixed(z_max, 0) + "]"};
  std::vector<double> grid{1.01, 1.1, 2, 5, 10, 100, 10000};
  constexpr int kSteps = 2000;
  const double lo = std::log(1e-3);
  const double hi = std::log(z_max - 1);
  for (int i = 0; i <= kSteps; ++i) grid.push_back(1 + std::exp(lo + (hi - lo) * i / kSteps));
  for (double z : grid) {
    if (z > z_max) continue;
    const double second = s_second_derivative(z);
    const double h = 0.25 * (z - 1);
    const double central = (s_value(z + h) - 2 * s_value(z) + s_value(z - h)) / (h * h);
    const double poly = s_second_derivative_certificate(z);
    const bool ok = second > 0 && central > 0 && poly > 0;
    record(out, std::min(second, central), ok, "z=" + format_fixed(z, 6));
  }
  return out;
}

}  // namespace abcmax

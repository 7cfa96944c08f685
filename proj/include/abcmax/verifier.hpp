#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abcmax/graph.hpp"
#include "abcmax/report.hpp"

namespace abcmax {

struct VerifierOptions {
  double epsilon = 1e-9;  // tie band that triggers extended-precision re-evaluation
  int jobs = 1;
  bool allow_long = false;
  bool predictions = true;
};

/// Tolerance for closed-form agreement of a cell maximum with its bound.
inline constexpr double kBoundTolerance = 1e-9;
/// Minimum strict gain for the monotonicity and rewrite checks.
inline constexpr double kStrictGap = 1e-12;

/// Expected extremal graph for a cell: K_n(k) for connectivity k in
/// [1, n-1], T_{n,chi} for chi in [2, n], K_n when unconstrained.
std::optional<Graph> predicted_extremal(int n, const ConstraintSpec& c);

/// Closed-form value that the cell maximum must not exceed, when one applies.
std::optional<double> cell_bound(int n, const ConstraintSpec& c);

/// Whether a cell is covered by a proven result (must-match) or is reported
/// as evidence only.
CellStatus cell_status(int n, const ConstraintSpec& c);

/// Recomputes the constraint on g.
bool satisfies(const Graph& g, const ConstraintSpec& c);

/// Scans every connected graph of order n once and fills one result per
/// constraint. Results do not depend on opts.jobs.
std::vector<ExtremalResult> scan_cells(int n, std::span<const ConstraintSpec> cells,
                                       const VerifierOptions& opts = {});

ExtremalResult find_maximizer(int n, const ConstraintSpec& c, const VerifierOptions& opts = {});

struct CampaignSpec {
  std::string name;
  int n_min = 1;
  int n_max = 0;
  std::vector<ConstraintKind> kinds;
  /// Fixed k or chi; when absent every value valid for n is scanned
  /// (connectivity 1..n-1, chromatic 2..n).
  std::optional<int> value;
};

Report run_campaign(const CampaignSpec& spec, const VerifierOptions& opts = {});

/// Random connected graphs of order 3..n_max plus a random non-edge; every
/// insertion must raise the ABC index by more than kStrictGap. Orders up to
/// 7 are drawn uniformly from the isomorphism classes, larger ones from
/// G(n, 1/2) conditioned on connectivity.
PropertySummary verify_monotonicity(std::uint64_t trials, int n_max, std::uint64_t seed);

/// The vertex-migration rewrite on bridges of cliques for every n <= n_max:
/// strict improvement, the s-decomposition of each value, the Karamata step
/// and the f inequality, and the end of the chain at K_n(1).
std::vector<PropertySummary> verify_bridge_rewrite(int n_max);

/// s'' > 0 and positive second central differences of s on a grid in (1, z_max].
PropertySummary verify_s_convexity(double z_max = 1e4);

}  // namespace abcmax

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "abcmax/graph.hpp"

namespace abcmax {

inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-invariant fingerprint of a graph of order <= 16: the order
/// plus the upper-triangle bit string (column-major, first pair in the most
/// significant bit) of the lexicographically least adjacency matrix among
/// the orderings admitted by degree refinement.
struct CanonicalForm {
  int order = 0;
  std::array<std::uint64_t, 2> bits{};

  /// order byte followed by the packed bit string, big-endian.
  std::vector<std::uint8_t> bytes() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> order_to_vertex;  // canonical position -> original vertex
};

/// Throws std::invalid_argument for order > 16.
CanonicalForm canonical_form(const Graph& g);
CanonicalLabeling canonical_labeling(const Graph& g);
/// g relabeled so that its adjacency matrix is the canonical one.
Graph canonical_graph(const Graph& g);

/// Order, size and sorted degree sequence first, then canonical forms.
bool are_isomorphic(const Graph& g, const Graph& h);

namespace detail {

/// Graph of order <= 16 as one adjacency mask per vertex.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxCanonicalOrder> adj{};

  static SmallGraph from(const Graph& g);
  Graph to_graph() const;
};

struct SmallCanonical {
  unsigned __int128 bits = 0;
  std::array<std::uint8_t, kMaxCanonicalOrder> order_to_vertex{};
};

/// Canonical string of g; when marked >= 0 that vertex is individualized
/// first, so two marked forms agree iff some isomorphism maps mark to mark.
SmallCanonical canonicalize(const SmallGraph& g, int marked = -1);

CanonicalForm to_form(int n, unsigned __int128 bits);

SmallGraph relabel(const SmallGraph& g, const SmallCanonical& c);

}  // namespace detail

}  // namespace abcmax

#pragma once

#include <optional>
#include <vector>

#include "abcmax/graph.hpp"

namespace abcmax {

struct ColoringResult {
  int chi = 0;
  std::vector<int> witness;  // vertex -> colour in [0, chi)
  int clique_lower = 0;
  int greedy_upper = 0;
};

/// Exact chromatic number with a proper witness using exactly chi colours.
ColoringResult chromatic_number(const Graph& g);

/// A proper colouring with at most k colours, if one exists.
std::optional<std::vector<int>> k_coloring(const Graph& g, int k);

bool is_k_colorable(const Graph& g, int k);

/// Size of a clique found greedily from every seed vertex, then improved by
/// one-for-two swaps. A lower bound on the clique number, not exact.
int greedy_clique_size(const Graph& g);

/// Saturation-degree greedy colouring.
std::vector<int> dsatur_greedy(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colours);

int colours_used(const std::vector<int>& colours);

}  // namespace abcmax

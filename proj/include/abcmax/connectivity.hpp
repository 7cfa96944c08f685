#pragma once

#include <utility>
#include <vector>

#include "abcmax/graph.hpp"

namespace abcmax {

struct ConnectivityResult {
  int lambda = 0;  // edge-connectivity
  int kappa = 0;   // vertex-connectivity
  // A minimum edge cut (empty for K_1 and disconnected graphs).
  std::vector<std::pair<int, int>> edge_cut;
  // A minimum separating vertex set (empty for complete and disconnected graphs).
  std::vector<int> vertex_cut;
};

/// Minimum number of edges whose deletion disconnects g; 0 for K_1 and for
/// disconnected graphs. Unit-capacity max-flow from vertex 0 to every other
/// vertex, each flow capped at the running minimum.
int edge_connectivity(const Graph& g);

/// Minimum vertex cut; n-1 for complete graphs, 0 when disconnected.
/// Vertex-split max-flow over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// Both values with witnesses.
ConnectivityResult connectivity(const Graph& g);

}  // namespace abcmax

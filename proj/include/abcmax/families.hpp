#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abcmax/graph.hpp"

namespace abcmax {

enum class FamilyKind { complete, kn_k, turan, bridge_cliques, cycle, path, star, empty };

/// A named graph family with its integer parameters.
///
///   complete        K_n                        (n)
///   kn_k            K_k v (K_1 + K_{n-k-1})    (n, k), 1 <= k <= n-1
///   turan           T_{n,l}                    (n, l), 1 <= l <= n
///   bridge_cliques  K_x and K_y plus one edge  (x, y), x, y >= 1
///   cycle, path, star, empty                   (n)
struct GraphFamily {
  FamilyKind kind = FamilyKind::complete;
  int n = 1;
  int k = 0;  // kn_k only
  int l = 0;  // turan only
  int x = 0;  // bridge_cliques only
  int y = 0;  // bridge_cliques only

  int order() const noexcept { return kind == FamilyKind::bridge_cliques ? x + y : n; }
  std::string name() const;
};

/// Throws std::invalid_argument when the parameters are out of range.
void validate(const GraphFamily& family);

Graph construct(const GraphFamily& family);

Graph complete_graph(int n);
/// K_{n-1} plus one extra vertex joined to k of its vertices. Vertices
/// 0..k-1 form the K_k, vertex k is the K_1, the rest the K_{n-k-1}.
Graph kn_k(int n, int k);
/// Complete l-partite graph, part sizes differ by at most one, larger parts
/// first, vertices labeled part by part.
Graph turan(int n, int l);
/// K_x on 0..x-1, K_y on x..x+y-1, bridge edge {0, x}.
Graph bridge_cliques(int x, int y);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,n-1} with centre 0.
Graph star_graph(int n);

/// Part sizes of T_{n,l}, non-increasing.
std::vector<int> turan_parts(int n, int l);

FamilyKind parse_family_kind(std::string_view text);
std::string_view to_string(FamilyKind kind);

}  // namespace abcmax

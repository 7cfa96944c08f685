#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace abcmax {

/// Simple undirected graph on vertices {0, ..., n-1}, stored as a symmetric
/// bit matrix with one row of 64-bit words per vertex.
///
/// The diagonal is always empty and adjacency is always symmetric; every
/// mutator preserves both. Degrees are not cached, they are recomputed from
/// the rows on demand.
class Graph {
 public:
  static constexpr int kMaxOrder = 4096;

  explicit Graph(int n);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept;

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;

  int words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  // Checked in-place mutation. Throws on self-loops, out-of-range vertices,
  // duplicate insertion and erasing a missing edge.
  void insert_edge(int u, int v);
  void erase_edge(int u, int v);

  bool is_complete() const noexcept { return size() == max_edges(n_); }

  /// Visits every edge once as (u, v) with u < v, in lexicographic order.
  template <typename F>
  void for_each_edge(F&& visit) const {
    for (int u = 0; u < n_; ++u) {
      const auto r = row(u);
      for (int w = (u + 1) / 64; w < words_; ++w) {
        std::uint64_t bits = r[w];
        if (w == (u + 1) / 64) bits &= ~std::uint64_t{0} << ((u + 1) % 64);
        while (bits != 0) {
          const int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          visit(u, v);
        }
      }
    }
  }

  /// Structural audit: symmetric, loop-free, no bits past column n-1.
  bool audit() const;

  static std::size_t max_edges(int n) noexcept {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  void set_bit(int u, int v, bool value) noexcept;

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

Graph empty_graph(int n);

// Value-semantic edge toggles.
Graph add_edge(Graph g, int u, int v);
Graph remove_edge(Graph g, int u, int v);

/// G + H: vertices of h are shifted by order(g), no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);
/// G v H: the disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// Returns the graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Degrees sorted non-increasing.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace abcmax

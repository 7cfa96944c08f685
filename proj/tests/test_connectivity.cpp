#include <doctest.h>

#include <random>
#include <set>

#include "abcmax/connectivity.hpp"
#include "abcmax/families.hpp"
#include "oracles.hpp"

using namespace abcmax;

namespace {

bool disconnects_edges(const Graph& g, const std::vector<std::pair<int, int>>& cut) {
  Graph h = g;
  for (auto [u, v] : cut) h.erase_edge(u, v);
  return !is_connected(h);
}

bool disconnects_vertices(const Graph& g, const std::vector<int>& cut) {
  std::uint32_t alive = oracle::full_mask(g.order());
  for (int v : cut) alive &= ~(1U << v);
  return !oracle::connected_on(g, alive);
}

}  // namespace

TEST_CASE("connectivity: trivial and named graphs") {
  CHECK(edge_connectivity(Graph(1)) == 0);
  CHECK(vertex_connectivity(Graph(1)) == 0);
  CHECK(edge_connectivity(Graph(3)) == 0);
  CHECK(vertex_connectivity(Graph(3)) == 0);
  CHECK(edge_connectivity(complete_graph(2)) == 1);
  CHECK(vertex_connectivity(complete_graph(2)) == 1);
  for (int n = 3; n <= 20; ++n) {
    CHECK(edge_connectivity(complete_graph(n)) == n - 1);
    CHECK(vertex_connectivity(complete_graph(n)) == n - 1);
    CHECK(edge_connectivity(cycle_graph(n)) == 2);
    CHECK(vertex_connectivity(path_graph(n)) == 1);
    CHECK(vertex_connectivity(star_graph(n)) == 1);
  }
  CHECK(edge_connectivity(oracle::petersen()) == 3);
  CHECK(vertex_connectivity(oracle::petersen()) == 3);
  CHECK(vertex_connectivity(turan(9, 3)) == 6);
  CHECK(edge_connectivity(bridge_cliques(4, 5)) == 1);
}

TEST_CASE("connectivity: K_n(k) has both connectivities equal to k") {
  for (int n = 6; n <= 12; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const Graph g = kn_k(n, k);
      CHECK(edge_connectivity(g) == k);
      CHECK(vertex_connectivity(g) == k);
    }
  }
}

TEST_CASE("connectivity: every labeled graph on up to 6 vertices against brute force") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << Graph::max_edges(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      REQUIRE(edge_connectivity(g) == oracle::edge_connectivity(g));
      REQUIRE(vertex_connectivity(g) == oracle::vertex_connectivity(g));
    }
  }
}

TEST_CASE("connectivity: random graphs on 7 to 10 vertices, with witnesses") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 4);
    const double p = 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const ConnectivityResult r = connectivity(g);
    CHECK(r.lambda == oracle::edge_connectivity(g));
    CHECK(r.kappa == oracle::vertex_connectivity(g));
    // Whitney: kappa <= lambda <= min degree.
    CHECK(r.kappa <= r.lambda);
    const auto deg = g.degrees();
    CHECK(r.lambda <= *std::min_element(deg.begin(), deg.end()));
    if (r.lambda > 0) {
      CHECK(r.edge_cut.size() == static_cast<std::size_t>(r.lambda));
      CHECK(disconnects_edges(g, r.edge_cut));
    }
    if (r.kappa > 0 && !g.is_complete()) {
      CHECK(r.vertex_cut.size() == static_cast<std::size_t>(r.kappa));
      CHECK(disconnects_vertices(g, r.vertex_cut));
    }
  }
}

TEST_CASE("connectivity: invariant under relabeling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(9, 0.5, rng);
    const Graph h = oracle::random_permutation_of(g, rng);
    CHECK(edge_connectivity(g) == edge_connectivity(h));
    CHECK(vertex_connectivity(g) == vertex_connectivity(h));
  }
}

TEST_CASE("connectivity: larger graphs") {
  // Two K_40 joined by a perfect matching on 3 vertex pairs.
  Graph g = disjoint_union(complete_graph(40), complete_graph(40));
  for (int i = 0; i < 3; ++i) g.insert_edge(i, 40 + i);
  CHECK(edge_connectivity(g) == 3);
  CHECK(vertex_connectivity(g) == 3);
  CHECK(edge_connectivity(complete_graph(70)) == 69);
}

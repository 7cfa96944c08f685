#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "abcmax/families.hpp"
#include "abcmax/graph.hpp"
#include "abcmax/graph6.hpp"
#include "oracles.hpp"

using namespace abcmax;

TEST_CASE("graph: construction bounds") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), std::invalid_argument);
  const Graph g(Graph::kMaxOrder);
  CHECK(g.order() == 4096);
  CHECK(g.size() == 0);
  CHECK(Graph(1).is_complete());
}

TEST_CASE("graph: edge mutation keeps the matrix symmetric") {
  Graph g(5);
  g.insert_edge(0, 3);
  g.insert_edge(4, 1);
  CHECK(g.adjacent(3, 0));
  CHECK(g.adjacent(1, 4));
  CHECK(g.size() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.audit());

  CHECK_THROWS_AS(g.insert_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.insert_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.insert_edge(0, 5), std::out_of_range);
  CHECK_THROWS_AS(g.erase_edge(1, 2), std::invalid_argument);

  g.erase_edge(3, 0);
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.size() == 1);

  const Graph h = add_edge(g, 2, 3);
  CHECK(h.size() == 2);
  CHECK(g.size() == 1);
  CHECK(remove_edge(h, 3, 2) == g);
}

TEST_CASE("graph: rows past 64 vertices") {
  Graph g(130);
  g.insert_edge(0, 129);
  g.insert_edge(63, 64);
  g.insert_edge(64, 128);
  CHECK(g.words_per_row() == 3);
  CHECK(g.neighbors(64) == std::vector<int>{63, 128});
  std::vector<std::pair<int, int>> seen;
  g.for_each_edge([&](int u, int v) { seen.emplace_back(u, v); });
  CHECK(seen == std::vector<std::pair<int, int>>{{0, 129}, {63, 64}, {64, 128}});
  CHECK(g.audit());
}

TEST_CASE("graph: union, join, relabel") {
  const Graph k3 = complete_graph(3);
  const Graph two = disjoint_union(k3, k3);
  CHECK(two.order() == 6);
  CHECK(two.size() == 6);
  CHECK(component_count(two) == 2);
  CHECK_FALSE(is_connected(two));

  const Graph j = join(empty_graph(2), empty_graph(3));
  CHECK(j.size() == 6);
  CHECK(degree_sequence(j) == std::vector<int>{3, 3, 2, 2, 2});

  CHECK_THROWS_AS(join(Graph(4000), Graph(97)), std::invalid_argument);

  const Graph p = path_graph(4);
  const std::vector<int> perm{3, 2, 1, 0};
  const Graph r = relabel(p, perm);
  CHECK(r == p);
  const std::vector<int> rot{1, 2, 3, 0};
  const Graph q = relabel(p, rot);
  CHECK(q.adjacent(1, 2));
  CHECK(q.adjacent(3, 0));
  CHECK_FALSE(q.adjacent(0, 1));
}

TEST_CASE("graph: connectivity of components agrees with search oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(is_connected(g) == oracle::connected(g));
    CHECK((component_count(g) == 1) == oracle::connected(g));
  }
}

TEST_CASE("families: named constructions") {
  CHECK(complete_graph(6).size() == 15);

  const Graph k = kn_k(6, 3);
  CHECK(k.size() == 13);
  CHECK(degree_sequence(k) == std::vector<int>{5, 5, 5, 4, 4, 3});
  CHECK(k.degree(3) == 3);  // the K_1
  CHECK(kn_k(6, 5) == complete_graph(6));

  // K_n(k) is K_{n-1} with one vertex joined to k of it.
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const Graph g = kn_k(n, k);
      CHECK(g.size() == Graph::max_edges(n - 1) + static_cast<std::size_t>(k));
      CHECK(g.degree(k) == k);
    }
  }

  const Graph t = turan(7, 3);
  CHECK(turan_parts(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(t.size() == 16);
  CHECK_FALSE(t.adjacent(0, 2));
  CHECK(t.adjacent(2, 3));
  CHECK(turan(5, 5) == complete_graph(5));
  CHECK(turan(4, 1).size() == 0);

  const Graph b = bridge_cliques(3, 4);
  CHECK(b.order() == 7);
  CHECK(b.size() == 3 + 6 + 1);
  CHECK(b.adjacent(0, 3));

  CHECK(cycle_graph(5).size() == 5);
  CHECK(path_graph(5).size() == 4);
  CHECK(star_graph(5).degree(0) == 4);
  CHECK(empty_graph(4).size() == 0);
}

TEST_CASE("families: validation and parsing") {
  CHECK_THROWS_AS(kn_k(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(kn_k(6, 6), std::invalid_argument);
  CHECK_THROWS_AS(turan(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(turan(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(bridge_cliques(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

  CHECK(parse_family_kind("knk") == FamilyKind::kn_k);
  CHECK(parse_family_kind("bridge") == FamilyKind::bridge_cliques);
  CHECK(parse_family_kind("turan") == FamilyKind::turan);
  CHECK_THROWS_AS(parse_family_kind("wheel"), std::invalid_argument);

  GraphFamily f{.kind = FamilyKind::bridge_cliques, .x = 2, .y = 5};
  CHECK(f.order() == 7);
  CHECK(construct(f) == bridge_cliques(2, 5));
  for (auto kind : {FamilyKind::complete, FamilyKind::cycle, FamilyKind::path, FamilyKind::star,
                    FamilyKind::empty}) {
    CHECK(parse_family_kind(to_string(kind)) == kind);
  }
}

TEST_CASE("graph6: known strings") {
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  CHECK(encode_graph6(path_graph(3)) == "Bg");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(decode_graph6("C~") == complete_graph(4));
  CHECK(decode_graph6(">>graph6<<Bg\n") == path_graph(3));
  CHECK(decode_graph6("Bw") == complete_graph(3));
}

TEST_CASE("graph6: round trip over every labeled graph up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << Graph::max_edges(n);
    std::set<std::string> distinct;
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      const std::string s = encode_graph6(g);
      CHECK(s.size() == 1 + (Graph::max_edges(n) + 5) / 6);
      distinct.insert(s);
      REQUIRE(decode_graph6(s) == g);
    }
    CHECK(distinct.size() == total);
  }
}

TEST_CASE("graph6: large orders use the long header") {
  std::mt19937_64 rng(3);
  for (int n : {62, 63, 100, 300}) {
    const Graph g = oracle::random_graph(n, 0.1, rng);
    const std::string s = encode_graph6(g);
    CHECK((s[0] == '~') == (n > 62));
    CHECK(decode_graph6(s) == g);
  }
}

TEST_CASE("graph6: malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("?"), Graph6Error);        // order 0
  CHECK_THROWS_AS(decode_graph6("C"), Graph6Error);        // too short
  CHECK_THROWS_AS(decode_graph6("C~~"), Graph6Error);      // too long
  CHECK_THROWS_AS(decode_graph6("C\x20"), Graph6Error);    // below 63
  CHECK_THROWS_AS(decode_graph6("Bx"), Graph6Error);       // padding bit set
  CHECK_THROWS_AS(decode_graph6("~??@"), Graph6Error);     // long header for n=1
}

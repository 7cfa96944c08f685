#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "abcmax/canonical.hpp"
#include "abcmax/enumeration.hpp"
#include "abcmax/families.hpp"
#include "abcmax/graph6.hpp"
#include "oracles.hpp"

using namespace abcmax;

TEST_CASE("canonical: isomorphism classes of labeled graphs match the permutation oracle") {
  const std::vector<std::size_t> classes{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, CanonicalForm> by_oracle;
    std::map<CanonicalForm, std::uint64_t> by_form;
    const std::uint64_t total = std::uint64_t{1} << Graph::max_edges(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      const std::uint64_t key = oracle::canonical_string(g);
      const CanonicalForm form = canonical_form(g);
      auto [it, fresh] = by_oracle.emplace(key, form);
      REQUIRE(it->second == form);
      auto [jt, fresh_form] = by_form.emplace(form, key);
      REQUIRE(jt->second == key);
    }
    CHECK(by_oracle.size() == classes[n - 1]);
  }
}

TEST_CASE("canonical: labeling and canonical graph are consistent") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxCanonicalOrder);
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 10) / 10.0, rng);
    const CanonicalLabeling lab = canonical_labeling(g);
    REQUIRE(lab.order_to_vertex.size() == static_cast<std::size_t>(n));
    std::vector<int> perm(n);
    for (int pos = 0; pos < n; ++pos) perm[lab.order_to_vertex[pos]] = pos;
    const Graph c = canonical_graph(g);
    CHECK(relabel(g, perm) == c);
    CHECK(canonical_form(c) == lab.form);
    CHECK(canonical_graph(c) == c);

    const Graph h = oracle::random_permutation_of(g, rng);
    CHECK(canonical_form(h) == lab.form);
    CHECK(canonical_graph(h) == c);
    CHECK(are_isomorphic(g, h));
  }
}

TEST_CASE("canonical: regular and symmetric graphs") {
  std::mt19937_64 rng(37);
  const std::vector<Graph> graphs{oracle::petersen(), cycle_graph(16), turan(16, 4),
                                  complete_graph(16), Graph(16), disjoint_union(cycle_graph(8), cycle_graph(8))};
  for (const Graph& g : graphs) {
    const CanonicalForm form = canonical_form(g);
    for (int i = 0; i < 10; ++i) CHECK(canonical_form(oracle::random_permutation_of(g, rng)) == form);
  }
  // Same degree sequence, not isomorphic.
  CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
  CHECK_FALSE(are_isomorphic(oracle::petersen(), disjoint_union(cycle_graph(5), cycle_graph(5))));
  CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(4)));
  CHECK(are_isomorphic(kn_k(7, 7 - 1), complete_graph(7)));
}

TEST_CASE("canonical: order limit") {
  CHECK_THROWS_AS(canonical_form(Graph(17)), std::invalid_argument);
  CHECK_THROWS_AS(canonical_graph(Graph(17)), std::invalid_argument);
  const auto bytes = canonical_form(complete_graph(3)).bytes();
  CHECK(bytes.front() == 3);
}

TEST_CASE("enumeration: connected class counts") {
  const std::vector<std::size_t> counts{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    const auto graphs = connected_graphs(n);
    CHECK(graphs.size() == counts[n - 1]);
    std::set<CanonicalForm> forms;
    for (const auto& g : graphs) {
      REQUIRE(g.order() == n);
      REQUIRE(is_connected(g));
      REQUIRE(canonical_graph(g) == g);
      forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == graphs.size());
  }
}

TEST_CASE("enumeration: all-graph class counts") {
  const std::vector<std::size_t> counts{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    const auto graphs = all_graphs(n);
    CHECK(graphs.size() == counts[n - 1]);
    std::set<CanonicalForm> forms;
    for (const auto& g : graphs) forms.insert(canonical_form(g));
    CHECK(forms.size() == graphs.size());
  }
}

TEST_CASE("enumeration: connected classes equal the brute-force classes up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> expected;
    const std::uint64_t total = std::uint64_t{1} << Graph::max_edges(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      if (oracle::connected(g)) expected.insert(oracle::canonical_string(g));
    }
    std::set<std::uint64_t> got;
    for (const auto& g : connected_graphs(n)) got.insert(oracle::canonical_string(g));
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration: output does not depend on the worker count") {
  const auto serial = connected_graphs(7, {.jobs = 1});
  for (int jobs : {2, 3, 8}) {
    CHECK(connected_graphs(7, {.jobs = jobs}) == serial);
    CHECK(all_graphs(6, {.jobs = jobs}) == all_graphs(6));
  }
}

TEST_CASE("enumeration: children of small parents") {
  std::vector<std::string> kids;
  for_each_child(Graph(1), [&](const Graph& g) { kids.push_back(encode_graph6(g)); });
  CHECK(kids == std::vector<std::string>{"A_"});
  std::size_t total = 0;
  for (const auto& p : connected_graphs(4)) for_each_child(p, [&](const Graph&) { ++total; });
  CHECK(total == 21);
}

TEST_CASE("enumeration: order limits") {
  CHECK_THROWS_AS(check_enumeration_order(0, false), std::invalid_argument);
  CHECK_NOTHROW(check_enumeration_order(9, false));
  CHECK_THROWS_AS(check_enumeration_order(10, false), std::invalid_argument);
  CHECK_NOTHROW(check_enumeration_order(10, true));
  CHECK_THROWS_AS(check_enumeration_order(11, true), std::invalid_argument);
  CHECK_THROWS_AS(connected_graphs(11), std::invalid_argument);
}

TEST_CASE("parallel_chunks: covers the range exactly once") {
  for (int jobs : {1, 2, 5, 64}) {
    std::vector<int> hits(37, 0);
    parallel_chunks(hits.size(), jobs, [&](int, std::size_t first, std::size_t last) {
      for (std::size_t i = first; i < last; ++i) ++hits[i];
    });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
  CHECK_THROWS_AS(parallel_chunks(4, 2,
                                  [](int w, std::size_t, std::size_t) {
                                    if (w == 1) throw std::runtime_error("boom");
                                  }),
                  std::runtime_error);
}

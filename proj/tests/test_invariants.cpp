#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "abcmax/families.hpp"
#include "abcmax/invariants.hpp"
#include "oracles.hpp"

using namespace abcmax;
using doctest::Approx;

TEST_CASE("f_abc: values and domain") {
  CHECK(f_abc(1, 1) == 0.0);
  CHECK(f_abc(2, 2) == Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(f_abc(3, 4) == Approx(std::sqrt(5.0 / 12.0)).epsilon(1e-15));
  CHECK(f_abc(1, 7) == Approx(f_abc(7, 1)).epsilon(1e-15));
  // f(2, b) does not depend on b.
  for (int b = 1; b < 50; ++b) CHECK(f_abc(2, b) == Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(f_abc(0, 3), std::domain_error);
  CHECK_THROWS_AS(f_abc(3, -1), std::domain_error);
}

TEST_CASE("abc_index: small fixed values") {
  CHECK(abc_index(Graph(1)) == 0.0);
  CHECK(abc_index(Graph(5)) == 0.0);
  CHECK(abc_index(complete_graph(2)) == 0.0);
  CHECK(abc_index(complete_graph(5)) == Approx(6.123724357).epsilon(1e-10));
  CHECK(abc_index(cycle_graph(5)) == Approx(3.535533906).epsilon(1e-10));
  CHECK(abc_index(star_graph(5)) == Approx(4 * std::sqrt(0.75)).epsilon(1e-14));
  CHECK(abc_index(kn_k(6, 3)) == Approx(7.756443177).epsilon(1e-10));
}

TEST_CASE("abc_index: complete graphs match the closed form") {
  for (int n = 2; n <= 200; ++n) {
    CHECK(std::abs(abc_index(complete_graph(n)) - abc_complete(n)) <= 1e-9);
  }
  // Orders well past the enumeration range.
  CHECK(std::abs(abc_index(complete_graph(600)) - abc_complete(600)) <= 1e-9);
}

TEST_CASE("abc_index: agrees with the edge-list oracle and is labeling invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const double value = abc_index(g);
    CHECK(value == Approx(oracle::abc(g)).epsilon(1e-12));
    CHECK(abc_index(oracle::random_permutation_of(g, rng)) == Approx(value).epsilon(1e-12));
  }
}

TEST_CASE("abc_index: extended precision matches double") {
  using Extended = boost::multiprecision::cpp_dec_float_50;
  for (int n = 3; n <= 30; ++n) {
    const Graph g = kn_k(n, n / 2);
    const Extended precise = abc_index<Extended>(g);
    CHECK(std::abs(static_cast<double>(precise) - abc_index(g)) <= 1e-12);
  }
}

TEST_CASE("edge_sum: arbitrary weights") {
  const Graph p = path_graph(4);
  CHECK(edge_sum(p, [](int a, int b) { return double(a * b); }) == 2 + 4 + 2);
  CHECK(edge_sum(complete_graph(4), [](int a, int b) { return 1.0 / std::sqrt(a * b); }) ==
        Approx(2.0).epsilon(1e-15));
  CHECK(edge_sum(Graph(3), [](int, int) { return 1.0; }) == 0.0);
  CHECK_THROWS_AS(edge_sum(p, [](int a, int) { return a == 1 ? std::nan("") : 1.0; }),
                  std::domain_error);
  CHECK_THROWS_AS(
      edge_sum(p, [](int, int) { return std::numeric_limits<double>::infinity(); }),
      std::domain_error);
}

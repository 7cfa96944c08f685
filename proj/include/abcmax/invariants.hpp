#pragma once

#include <cmath>
#include <concepts>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcmax/graph.hpp"

namespace abcmax {

/// Degree-based edge weight: symmetric, defined for degrees >= 1.
using EdgeFunction = std::function<double(int, int)>;

/// sqrt((a + b - 2) / (a b)), the atom-bond connectivity edge weight.
template <typename Scalar = double>
Scalar f_abc(int a, int b) {
  if (a < 1 || b < 1) {
    throw std::domain_error("f_abc: degrees must be >= 1, got (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
  }
  using std::sqrt;
  return sqrt(Scalar(a + b - 2) / (Scalar(a) * Scalar(b)));
}

namespace detail {

// Neumaier's variant of Kahan summation; works for any field-like Scalar.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(const Scalar& value) {
    using std::abs;
    const Scalar t = sum_ + value;
    if (abs(sum_) >= abs(value)) {
      carry_ += (sum_ - t) + value;
    } else {
      carry_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  Scalar result() const { return sum_ + carry_; }

 private:
  Scalar sum_{0};
  Scalar carry_{0};
};

}  // namespace detail

/// Compensated sum of weight(d(u), d(v)) over edges in (min, max)
/// lexicographic order.
template <typename Scalar, typename Weight>
  requires std::invocable<Weight&, int, int>
Scalar edge_sum_as(const Graph& g, Weight&& weight) {
  const std::vector<int> deg = g.degrees();
  detail::CompensatedSum<Scalar> acc;
  g.for_each_edge([&](int u, int v) { acc.add(Scalar(weight(deg[u], deg[v]))); });
  return acc.result();
}

template <typename Scalar = double>
Scalar abc_index(const Graph& g) {
  return edge_sum_as<Scalar>(g, [](int a, int b) { return f_abc<Scalar>(a, b); });
}

/// Edge sum for a caller-supplied weight. Throws std::domain_error when the
/// weight is non-finite on a degree pair that occurs in g.
double edge_sum(const Graph& g, const EdgeFunction& ef);

/// n sqrt(2n - 4) / 2, the value at the complete graph.
template <typename Scalar = double>
Scalar abc_complete(int n) {
  using std::sqrt;
  return Scalar(n) * sqrt(Scalar(2 * n - 4)) / Scalar(2);
}

}  // namespace abcmax

#include "abcmax/invariants.hpp"

namespace abcmax {

double edge_sum(const Graph& g, const EdgeFunction& ef) {
  return edge_sum_as<double>(g, [&](int a, int b) {
    const double w = ef(a, b);
    if (!std::isfinite(w)) {
      throw std::domain_error("edge function undefined at degrees (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
    }
    return w;
  });
}

}  // namespace abcmax

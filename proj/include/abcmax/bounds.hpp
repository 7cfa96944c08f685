#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcmax/invariants.hpp"

namespace abcmax {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// ---------------------------------------------------------------------------
// Closed forms for the extremal families. None of these builds a graph.
// ---------------------------------------------------------------------------

enum class KRange {
  extended,  // 1 <= k <= n-2
  literal,   // 2 <= k <= n-2
};

/// Maximum ABC index over graphs of order n >= 6 with edge-connectivity k,
/// attained by K_n(k).
template <typename Scalar = double>
Scalar theorem1_bound(int n, int k, KRange range = KRange::extended) {
  const int k_min = range == KRange::literal ? 2 : 1;
  if (n < 6 || k < k_min || k > n - 2) {
    throw std::invalid_argument("theorem1_bound: need n >= 6 and " + std::to_string(k_min) +
                                " <= k <= n-2, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  using std::sqrt;
  const Scalar N(n), K(k);
  const Scalar t1 = K * sqrt((N + K - 3) / (K * (N - 1)));
  const Scalar t2 = K * (K - 1) / (2 * (N - 1)) * sqrt(2 * N - 4);
  const Scalar t3 = (N - K - 1) * (N - K - 2) / (2 * (N - 2)) * sqrt(2 * N - 6);
  const Scalar t4 = K * (N - K - 1) * sqrt((2 * N - 5) / ((N - 1) * (N - 2)));
  return t1 + t2 + t3 + t4;
}

/// Maximum over bipartite connected graphs of order n, attained by T_{n,2}.
template <typename Scalar = double>
Scalar theorem2_bound(int n) {
  if (n < 2) throw std::invalid_argument("theorem2_bound: need n >= 2");
  using std::sqrt;
  const Scalar N(n);
  if (n % 2 == 0) return N / 2 * sqrt(N - 2);
  return sqrt((N - 2) * (N * N - 1)) / 2;
}

/// n sqrt((chi (n-1) - n) / (2 chi)); the value at T_{n,chi} when chi | n.
template <typename Scalar = double>
Scalar corollary3_bound(int n, int chi) {
  if (chi < 2 || n < chi) {
    throw std::invalid_argument("corollary3_bound: need chi >= 2 and n >= chi");
  }
  using std::sqrt;
  const Scalar N(n), C(chi);
  return N * sqrt((C * (N - 1) - N) / (2 * C));
}

// ---------------------------------------------------------------------------
// Colour-class profiles.
// ---------------------------------------------------------------------------

/// Part sizes t_1..t_chi of a vertex partition, all >= 1, chi >= 2.
///
/// Pair quantities are laid out over i < j in row-major order:
///   x_ij = t_i t_j / (sqrt(n - t_i) sqrt(n - t_j))
///   y_ij = sqrt(2n - t_i - t_j - 2)
/// so that x . y is the ABC index of the complete multipartite graph.
class PartitionProfile {
 public:
  explicit PartitionProfile(std::vector<int> parts) : t_(std::move(parts)) {
    if (t_.size() < 2) throw std::invalid_argument("partition profile needs >= 2 parts");
    for (int p : t_) {
      if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
    }
    n_ = std::accumulate(t_.begin(), t_.end(), 0);
  }

  int order() const noexcept { return n_; }
  int parts() const noexcept { return static_cast<int>(t_.size()); }
  const std::vector<int>& sizes() const noexcept { return t_; }
  int pair_count() const noexcept { return parts() * (parts() - 1) / 2; }
  bool balanced() const {
    return std::all_of(t_.begin(), t_.end(), [&](int p) { return p == t_.front(); });
  }

  template <typename Scalar = double>
  Vector<Scalar> x() const {
    using std::sqrt;
    Vector<Scalar> out(pair_count());
    for_each_pair([&](int idx, int ti, int tj) {
      out(idx) = Scalar(ti) * Scalar(tj) / (sqrt(Scalar(n_ - ti)) * sqrt(Scalar(n_ - tj)));
    });
    return out;
  }

  template <typename Scalar = double>
  Vector<Scalar> y() const {
    using std::sqrt;
    Vector<Scalar> out(pair_count());
    for_each_pair([&](int idx, int ti, int tj) { out(idx) = sqrt(Scalar(y_squared(ti, tj))); });
    return out;
  }

  /// Sum of the integers y_ij^2, exact.
  std::int64_t y_norm_squared_exact() const {
    std::int64_t total = 0;
    for_each_pair([&](int, int ti, int tj) { total += y_squared(ti, tj); });
    return total;
  }

  /// (chi - 1)(chi (n - 1) - n), the closed form of ||y||^2.
  std::int64_t y_norm_squared_closed_form() const {
    const std::int64_t c = parts();
    return (c - 1) * (c * (n_ - 1) - n_);
  }

 private:
  std::int64_t y_squared(int ti, int tj) const { return 2LL * n_ - ti - tj - 2; }

  template <typename F>
  void for_each_pair(F&& f) const {
    int idx = 0;
    for (int i = 0; i < parts(); ++i) {
      for (int j = i + 1; j < parts(); ++j) f(idx++, t_[i], t_[j]);
    }
  }

  std::vector<int> t_;
  int n_ = 0;
};

/// Sum over i < j of t_i t_j sqrt((2n - t_i - t_j - 2) / ((n - t_i)(n - t_j))).
template <typename Scalar = double>
Scalar partition_upper_bound(const PartitionProfile& p) {
  return p.x<Scalar>().dot(p.y<Scalar>());
}

template <typename Scalar = double>
struct CauchySchwarzBound {
  Scalar sum;           // <x, y>
  Scalar norm_product;  // ||x|| ||y||
  Scalar x_norm_squared;
  Scalar y_norm_squared;
};

template <typename Scalar = double>
CauchySchwarzBound<Scalar> cauchy_schwarz_bound(const PartitionProfile& p) {
  const Vector<Scalar> x = p.x<Scalar>();
  const Vector<Scalar> y = p.y<Scalar>();
  if (p.y_norm_squared_exact() != p.y_norm_squared_closed_form()) {
    throw std::logic_error("||y||^2 disagrees with (chi-1)(chi(n-1)-n)");
  }
  using std::sqrt;
  const Scalar xx = x.squaredNorm();
  const Scalar yy = Scalar(p.y_norm_squared_exact());
  return {x.dot(y), sqrt(xx) * sqrt(yy), xx, yy};
}

/// max |x_ij / y_ij - mean ratio|; zero exactly when x and y are parallel.
/// A profile with a single pair is parallel by definition.
template <typename Scalar = double>
Scalar cs_equality_gap(const PartitionProfile& p) {
  if (p.pair_count() == 1) return Scalar(0);
  const Vector<Scalar> ratio = p.x<Scalar>().cwiseQuotient(p.y<Scalar>());
  return (ratio.array() - ratio.mean()).abs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Functions used by the edge-connectivity-one argument.
// ---------------------------------------------------------------------------

/// s(z) = z(z-1)/2 f(z,z) + z f(z,z+1), with the binomial read as a real
/// polynomial. Defined for z >= 1; s(1) = f(1,2) is the value of a K_2 block.
template <typename Scalar = double>
Scalar s_value(const Scalar& z) {
  if (!(z >= Scalar(1))) throw std::domain_error("s_value: need z >= 1");
  using std::sqrt;
  const Scalar f_zz = sqrt((2 * z - 2) / (z * z));
  const Scalar f_zz1 = sqrt((2 * z - 1) / (z * (z + 1)));
  return z * (z - 1) / 2 * f_zz + z * f_zz1;
}

/// Closed-form second derivative of s for z > 1:
/// (3 sqrt2 / sqrt(z-1) + 24 / ((z+1)^{5/2} sqrt(z(2z-1)))
///    - 2 (1 - 2z(z+2))^2 / ((z+1)^{5/2} (z(2z-1))^{3/2})) / 8
template <typename Scalar = double>
Scalar s_second_derivative(const Scalar& z) {
  if (!(z > Scalar(1))) throw std::domain_error("s_second_derivative: need z > 1");
  using std::pow;
  using std::sqrt;
  const Scalar q = z * (2 * z - 1);
  const Scalar p52 = pow(z + 1, Scalar(2.5));
  const Scalar w = 1 - 2 * z * (z + 2);
  return (3 * sqrt(Scalar(2)) / sqrt(z - 1) + 24 / (p52 * sqrt(q)) -
          2 * w * w / (p52 * q * sqrt(q))) /
         8;
}

/// The cleared-denominator inequality 18 (z+1)^5 (2z^2 - z)^3 > 4 (1 - 2z^2 - 4z)^4 (z-1)
/// behind the positivity of s''; returns left minus right.
template <typename Scalar = double>
Scalar s_second_derivative_certificate(const Scalar& z) {
  using std::pow;
  const Scalar lhs = 18 * pow(z + 1, 5) * pow(2 * z * z - z, 3);
  const Scalar rhs = 4 * pow(1 - 2 * z * z - 4 * z, 4) * (z - 1);
  return lhs - rhs;
}

/// f(x-1, y+1) - f(x, y) for 3 <= x <= y.
template <typename Scalar = double>
Scalar f_rewrite_inequality(int x, int y) {
  if (x < 3 || y < x) throw std::invalid_argument("f_rewrite_inequality: need 3 <= x <= y");
  return f_abc<Scalar>(x - 1, y + 1) - f_abc<Scalar>(x, y);
}

// ---------------------------------------------------------------------------
// Majorization.
// ---------------------------------------------------------------------------

struct KaramataResult {
  bool majorizes = false;
  bool inequality_holds = false;
  double lhs = 0;  // sum cf(a_i)
  double rhs = 0;  // sum cf(b_i)

  bool ok() const { return majorizes && inequality_holds; }
};

/// Tolerance for sum equality and the convex-sum comparison, relative to
/// max(1, magnitude).
inline constexpr double kKaramataTolerance = 1e-12;

/// a majorizes b when every prefix sum of a dominates that of b and the
/// totals agree. Both must be sorted non-increasing and of equal length.
bool majorizes(const Vector<double>& a, const Vector<double>& b);

/// Majorization plus sum cf(a_i) >= sum cf(b_i).
KaramataResult karamata_check(const Vector<double>& a, const Vector<double>& b,
                              const std::function<double(double)>& cf);

}  // namespace abcmax

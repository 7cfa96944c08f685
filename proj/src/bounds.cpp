#include "abcmax/bounds.hpp"

namespace abcmax {

namespace {

void check_sequences(const Vector<double>& a, const Vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("karamata: length mismatch");
  for (Eigen::Index i = 1; i < a.size(); ++i) {
    if (a(i) > a(i - 1) || b(i) > b(i - 1)) {
      throw std::invalid_argument("karamata: sequences must be sorted non-increasing");
    }
  }
}

double scaled(double tol, double magnitude) { return tol * std::max(1.0, std::abs(magnitude)); }

}  // namespace

bool majorizes(const Vector<double>& a, const Vector<double>& b) {
  check_sequences(a, b);
  double pa = 0;
  double pb = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    pa += a(i);
    pb += b(i);
    if (pa < pb - scaled(kKaramataTolerance, pb)) return false;
  }
  return std::abs(pa - pb) <= scaled(kKaramataTolerance, pa);
}

KaramataResult karamata_check(const Vector<double>& a, const Vector<double>& b,
                              const std::function<double(double)>& cf) {
  KaramataResult r;
  r.majorizes = majorizes(a, b);
  r.lhs = a.unaryExpr(cf).sum();
  r.rhs = b.unaryExpr(cf).sum();
  r.inequality_holds = r.lhs >= r.rhs - scaled(kKaramataTolerance, r.rhs);
  return r;
}

}  // namespace abcmax

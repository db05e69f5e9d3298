#include "rflab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace rflab {

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  if (a == b) return 0.0;
  const double sign = a < b ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const int panels = std::max(1, static_cast<int>(std::ceil(hi - lo)));
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double p0 = lo + i * width;
    const double p1 = (i + 1 == panels) ? hi : p0 + width;
    total += gauss_kronrod<double, 31>::integrate(f, p0, p1, 15, rel_tol);
  }
  return sign * total;
}

}  // namespace rflab

#pragma once

#include <functional>

namespace rflab {

/// Adaptive Gauss-Kronrod integral of f over [a, b]. The interval is cut into
/// unit-width panels first so that narrow peaks are not stepped over.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13);

}  // namespace rflab

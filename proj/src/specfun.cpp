#include "rflab/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace rflab::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(cplx z) {
  const double re = z.real();
  if (re > 0.5) return false;
  const double tol = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(re));
  return std::abs(z.imag()) <= tol && std::abs(re - std::round(re)) <= tol;
}

// Generalized binomial coefficient C(x, j) for real x and integer j >= 0.
double binomial(double x, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= (x - i) / (i + 1);
  return r;
}

}  // namespace

double sin_pi(double x) noexcept {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  const double s = std::abs(r);
  double v;
  if (s <= 0.25) {
    v = std::sin(kPi * s);
  } else if (s <= 0.75) {
    v = std::cos(kPi * (s - 0.5));
  } else {
    v = std::sin(kPi * (1.0 - s));
  }
  return r < 0 ? -v : v;
}

double cos_pi(double x) noexcept {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double s = std::abs(std::remainder(x, 2.0));
  if (s <= 0.25) return std::cos(kPi * s);
  if (s <= 0.75) return -std::sin(kPi * (s - 0.5));
  return -std::cos(kPi * (1.0 - s));
}

cplx log_gamma_right(cplx z) {
  z -= 1.0;
  cplx series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

cplx gamma(cplx z) {
  if (near_nonpositive_integer(z)) {
    throw Error(ErrorKind::pole, "gamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    const double x = z.real();
    const double y = z.imag();
    const cplx sin_piz(sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y));
    return kPi / (sin_piz * std::exp(log_gamma_right(1.0 - z)));
  }
  return std::exp(log_gamma_right(z));
}

int jacobi_degree(int n, JacobiParams p) {
  if (n <= 0) return n < 0 ? -1 : 0;
  // The hypergeometric series terminates early when n + alpha + beta + 1 = -k, 0 <= k < n.
  const double t = n + p.alpha + p.beta + 1.0;
  const double k = -std::round(t);
  if (std::abs(t + k) < 1e-12 && k >= 0.0 && k < n) return static_cast<int>(k);
  return n;
}

cplx jacobi(int n, JacobiParams p, cplx z) {
  if (n == -1) return 0.0;
  if (n < -1 || n > kMaxJacobiDegree) {
    throw Error(ErrorKind::domain, "jacobi: degree " + std::to_string(n) + " outside [-1, " +
                                       std::to_string(kMaxJacobiDegree) + "]");
  }
  if (n == 0) return 1.0;
  const cplx u = 0.5 * (z - 1.0);
  const int degree = jacobi_degree(n, p);
  if (degree < n) {
    // Terminating form sum_j binom(n+alpha, n-j) (-degree)_j / j! u^j; the
    // symmetric binomial sum would cancel catastrophically for large |z|.
    cplx sum = 0.0;
    cplx u_pow = 1.0;
    double poch = 1.0;
    for (int j = 0; j <= degree; ++j) {
      sum += binomial(n + p.alpha, n - j) * poch * u_pow;
      poch *= static_cast<double>(j - degree) / (j + 1);
      u_pow *= u;
    }
    return sum;
  }
  const cplx v = 0.5 * (z + 1.0);
  cplx sum = 0.0;
  cplx u_pow = 1.0;
  for (int s = 0; s <= n; ++s) {
    sum += binomial(n + p.alpha, n - s) * binomial(n + p.beta, s) * u_pow * std::pow(v, n - s);
    u_pow *= u;
  }
  return sum;
}

cplx jacobi_derivative(int n, JacobiParams p, cplx z) {
  if (n <= 0) return 0.0;
  return 0.5 * (n + p.alpha + p.beta + 1.0) * jacobi(n - 1, {p.alpha + 1.0, p.beta + 1.0}, z);
}

cplx exceptional_jacobi(int n, int m, JacobiParams p, cplx z) {
  if (n < 0 || m < 0) throw Error(ErrorKind::domain, "exceptional_jacobi: negative n or m");
  const double a = p.alpha;
  const double b = p.beta;
  const double den = a + 1.0 + n;
  if (std::abs(den) < 1e-14) {
    throw Error(ErrorKind::singular, "exceptional_jacobi: alpha + 1 + n vanishes");
  }
  const cplx first = (1.0 + a + b + n) / (2.0 * den) * (z - 1.0) * jacobi(m, {-a - 1.0, b - 1.0}, z) *
                     jacobi(n - 1, {a + 2.0, b}, z);
  const cplx second = (1.0 + a - m) / den * jacobi(m, {-2.0 - a, b}, z) * jacobi(n, {a + 1.0, b - 1.0}, z);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * (first + second);
}

}  // namespace rflab::specfun

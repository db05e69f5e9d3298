#pragma once

#include "rflab/core.hpp"

namespace rflab::specfun {

/// Jacobi parameters. No sign restriction: the Scarf-II eigenfunctions use
/// alpha = b - a - 1/2 and beta = -b - a - 1/2, which are usually negative.
struct JacobiParams {
  double alpha;
  double beta;
};

/// sin(pi x) and cos(pi x) with exact zeros at integers and half-integers.
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;

/// Complex Gamma function, relative accuracy ~1e-13 for |z| <= 50.
/// Throws Error(pole) at 0, -1, -2, ...
cplx gamma(cplx z);

/// log Gamma on the principal branch for Re z >= 1/2 (used by gamma()).
cplx log_gamma_right(cplx z);

/// Jacobi polynomial P_n^{(alpha,beta)}(z) from the explicit binomial sum,
///   sum_s C(n+alpha, n-s) C(n+beta, s) ((z-1)/2)^s ((z+1)/2)^(n-s),
/// which is a polynomial identity in alpha and beta and therefore valid for
/// negative non-integer parameters. n == -1 returns 0.
cplx jacobi(int n, JacobiParams p, cplx z);

/// Actual polynomial degree of P_n^(alpha,beta): lower than n when
/// n + alpha + beta + 1 is an integer in [1-n, 0].
int jacobi_degree(int n, JacobiParams p);

/// d/dz P_n^{(alpha,beta)}(z) = (n+alpha+beta+1)/2 P_{n-1}^{(alpha+1,beta+1)}(z).
cplx jacobi_derivative(int n, JacobiParams p, cplx z);

/// Exceptional X_m Jacobi polynomial \hat P_{n+m}^{(alpha,beta)}(z):
///
///   (-1)^m [ (1+alpha+beta+n) / (2(1+alpha+n)) (z-1) P_m^{(-alpha-1,beta-1)}(z) P_{n-1}^{(alpha+2,beta)}(z)
///          + (1+alpha-m) / (alpha+1+n)       P_m^{(-2-alpha,beta)}(z)   P_n^{(alpha+1,beta-1)}(z) ]
///
/// For m = 0 this reduces to P_n^{(alpha,beta)}(z).
/// Throws Error(singular) when alpha + 1 + n vanishes.
cplx exceptional_jacobi(int n, int m, JacobiParams p, cplx z);

inline constexpr int kMaxJacobiDegree = 200;

}  // namespace rflab::specfun

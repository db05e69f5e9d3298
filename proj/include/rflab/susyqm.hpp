#pragma once

#include <vector>

#include "rflab/core.hpp"
#include "rflab/potentials.hpp"

namespace rflab {

/// I(x) = integral_{-inf}^{x} [psi_0(y)]^2 dy for the well -N(N+1) sech^2,
/// psi_0 = C_0 sech^N.
///
/// The antiderivative comes from the reduction
///   int sech^{2N} = sech^{2N-2} tanh / (2N-1) + (2N-2)/(2N-1) int sech^{2N-2},
/// which gives I(x) = 1/2 + tanh(x) q(sech^2 x) with a polynomial q. That form
/// cancels catastrophically for x -> -inf, so the lower tail is evaluated from
/// the series in w = 1 - |tanh x| instead. Both I and 1 - I keep full relative
/// precision on the whole line.
class IsospectralIntegral {
 public:
  explicit IsospectralIntegral(int N);

  int N() const noexcept { return N_; }

  /// [C_0^{(N)}]^2 = Gamma(N+1/2) / (sqrt(pi) Gamma(N)).
  double ground_norm_squared() const noexcept { return c0_sq_; }

  double operator()(double x) const;
  double complement(double x) const;  // 1 - I(x)

  /// I(x) + lambda without cancellation for lambda near 0 or -1.
  double shifted(double lambda, double x) const;

  double derivative(double x) const;         // psi_0^2
  double second_derivative(double x) const;  // 2 psi_0 psi_0'

 private:
  double reduction(double x) const;   // 1/2 + tanh(x) q(sech^2 x)
  double upper_tail(double y) const;  // 1 - I(y) for y >= 0

  int N_;
  double c0_sq_;
  std::vector<double> q_;     // I = 1/2 + tanh(x) sum_j q_j sech^{2j}(x)
  std::vector<double> tail_;  // 1 - I(y) = sum_j tail_j w^{N+j},  w = 1 - tanh y
};

double isospectral_integral(int N, double x);

/// W(x) for one factorization H - E_0 = A^dagger A, with A = d/dx + W.
/// Supports RealSech, ScarfII (both branches), IsospectralFamily, Pursey and
/// AbrahamMoses specs.
class Superpotential {
 public:
  Superpotential(const PotentialSpec& spec, Branch branch);

  Branch branch() const noexcept { return branch_; }

  cplx operator()(double x) const;
  cplx derivative(double x) const;

  cplx w_minus() const noexcept { return w_minus_; }
  cplx w_plus() const noexcept { return w_plus_; }

  /// Ground-state energy E_0 of the potential W^2 - W' + E_0.
  double ground_energy() const noexcept { return e0_; }

  /// Coefficients of W = c_tanh tanh x + i c_sech sech x (+ deformation).
  double tanh_coefficient() const noexcept { return c_tanh_; }
  double sech_coefficient() const noexcept { return c_sech_; }

 private:
  double deformation(double x) const;             // d/dx ln(I + lambda)
  double deformation_derivative(double x) const;  // d^2/dx^2 ln(I + lambda)

  Branch branch_;
  double c_tanh_ = 0.0;
  double c_sech_ = 0.0;
  double e0_ = 0.0;
  std::optional<IsospectralIntegral> integral_;
  double lambda_ = 0.0;
  cplx w_minus_;
  cplx w_plus_;
};

Superpotential superpotential(const PotentialSpec& spec, Branch branch = Branch::normal);

/// Fourth-order central difference, used when no analytic derivative exists.
cplx central_derivative(const RealToComplex& f, double x, double h = 1e-3);

/// A f = f' + W f. Without `df`, f' is a fourth-order difference with step 1e-3.
RealToComplex apply_A(const Superpotential& w, RealToComplex f, RealToComplex df = {});

/// A^dagger f = -f' + W f.
RealToComplex apply_A_dagger(const Superpotential& w, RealToComplex f, RealToComplex df = {});

}  // namespace rflab

#pragma once

#include <vector>

#include "rflab/core.hpp"
#include "rflab/potentials.hpp"

namespace rflab {

struct BoundState {
  int n = 0;
  double energy = 0.0;
  RealToComplex wavefunction;
  cplx norm_constant;  // multiplies the un-normalized closed form

  cplx operator()(double x) const { return wavefunction(x); }
};

/// Closed-form bound-state energies, ascending. An empty list is a valid
/// answer (e.g. the normal branch of scarf2 with a <= 0).
std::vector<double> bound_energies(const PotentialSpec& spec);

/// Normalized closed-form eigenfunction number n of `spec`.
///
/// realsech carries the analytic constant C_n^{(N)}. Every complex family is
/// normalized numerically (L2 norm over [-40, 40]) with the phase chosen so
/// that psi(0) is real and positive; when psi(0) vanishes, psi(1) is used.
/// Throws Error(index) for n beyond the spectrum.
BoundState eigenfunction(const PotentialSpec& spec, int n);

/// Eigenfunction n of the one-parameter isospectral deformation of
/// -N(N+1) sech^2. Throws Error(domain) for lambda in [-1, 0].
BoundState family_eigenfunction(int N, double lambda, int n);

/// C_n^{(N)} = 2^N [ n! (N-n) Gamma(N-n+1/2)^2 / (Gamma(2N-n+1) pi) ]^{1/2}
double real_sech_norm(int N, int n);

/// max_i |-psi'' + (V - E) psi| / max_i |psi| over the interior of the grid
/// x_min + i dx, with psi'' from a five-point fourth-order stencil.
double schrodinger_residual(const RealToComplex& V, double E, const RealToComplex& psi, double x_min,
                            double x_max, double dx = 1e-3);

/// integral |psi|^2 dx over [x_min, x_max].
double norm_squared(const RealToComplex& psi, double x_min = -40.0, double x_max = 40.0);

}  // namespace rflab

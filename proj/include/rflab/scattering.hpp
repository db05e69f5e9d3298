#pragma once

#include <vector>

#include "rflab/core.hpp"
#include "rflab/potentials.hpp"
#include "rflab/susyqm.hpp"

namespace rflab {

enum class Incidence { left, right };
enum class AmplitudeSource { analytic, numeric };

const char* to_string(Incidence i) noexcept;
const char* to_string(AmplitudeSource s) noexcept;

/// Left incidence: psi ~ e^{ikx} + R e^{-ikx} as x -> -inf, T e^{ikx} as x -> +inf.
/// Right incidence is the mirror image.
struct ScatteringAmplitudes {
  double k = 0.0;
  cplx R;
  cplx T;
  AmplitudeSource source = AmplitudeSource::analytic;
  Incidence incidence = Incidence::left;
  double error_estimate = 0.0;  // numeric only: change under step halving
};

/// Gamma(-N-ik) Gamma(N-ik+1) / (Gamma(1-ik) Gamma(-ik)); |T| = 1.
cplx analytic_T_real(int N, double k);

/// Complex Scarf-II amplitudes,
///   T = Gamma(-a-ik) Gamma(1+a-ik) Gamma(1/2-b-ik) Gamma(1/2+b-ik) / (Gamma(-ik) Gamma(1-ik) Gamma(1/2-ik)^2)
///   R_left = T i [cos(pi a) sin(pi b) / cosh(pi k) + sin(pi a) cos(pi b) / sinh(pi k)].
/// The right-incidence reflection follows from V(-x; a, b) = V(x; a, -b).
/// R is exactly zero when a and b are both integers or both half-integers.
ScatteringAmplitudes analytic_RT_scarf2(double a, double b, double k, Branch branch = Branch::normal,
                                        Incidence incidence = Incidence::left);

/// zeta(m, a, b, k) = ([b^2 - (ik-1/2)^2] + (b-ik+1/2)(1-m)) / ([b^2 - (ik+1/2)^2] + (b+ik+1/2)(1-m))
cplx zeta(int m, double a, double b, double k);

/// Rationally extended Scarf-II: the conventional amplitudes times zeta, with
/// the parametric substitution applied before zeta is formed.
ScatteringAmplitudes analytic_RT_extended(double a, double b, int m, double k, Branch branch = Branch::normal,
                                          Incidence incidence = Incidence::left);

enum class SusyRelation { partner, pursey, abraham_moses };

/// Amplitudes of the partner, Pursey or Abraham-Moses potential from those of
/// the base potential whose superpotential is `w`. Only symmetric channels
/// (W_+^2 = W_-^2, hence k' = k) are supported.
ScatteringAmplitudes partner_RT(const ScatteringAmplitudes& base, const Superpotential& w, SusyRelation relation);

/// Closed-form amplitudes for any family.
ScatteringAmplitudes analytic_amplitudes(const PotentialSpec& spec, double k, Incidence incidence = Incidence::left);

struct NumericScatterOptions {
  double L = 25.0;              // integration domain [-L, L]
  double dx = 1e-3;             // RK4 step; the check run uses dx/2
  double tolerance = 1e-6;      // step-halving change must stay below 10x this
  double tail_tolerance = 1e-7; // require |V(+-L)| < tail_tolerance * k^2
};

/// Potential sampled once on [-L, L] for any number of (k, incidence) solves.
class ScatteringGrid {
 public:
  ScatteringGrid(const RealToComplex& V, const NumericScatterOptions& options = {});
  ScatteringGrid(const PotentialSpec& spec, const NumericScatterOptions& options = {});

  ScatteringAmplitudes solve(double k, Incidence incidence = Incidence::left) const;

  const NumericScatterOptions& options() const noexcept { return options_; }

 private:
  cplx run(double k, bool mirrored, int stride, cplx* B_out) const;

  NumericScatterOptions options_;
  double step_ = 0.0;            // actual coarse step, 2L / steps
  std::vector<cplx> v_;          // V at -L + j step/4
};

/// Integrates psi'' = (V - k^2) psi with fourth-order Runge-Kutta from the
/// transmitted side, carrying psi in the form A(x) e^{ikx} + B(x) e^{-ikx}
/// (so a vanishing potential is integrated exactly). Starts from the pure
/// outgoing wave and reads R = B/A, T = 1/A on the incident side.
ScatteringAmplitudes numeric_scatter(const PotentialSpec& spec, double k, Incidence incidence = Incidence::left,
                                     const NumericScatterOptions& options = {});
ScatteringAmplitudes numeric_scatter(const RealToComplex& V, double k, Incidence incidence = Incidence::left,
                                     const NumericScatterOptions& options = {});

}  // namespace rflab

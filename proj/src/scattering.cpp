#include "rflab/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rflab/specfun.hpp"

namespace rflab {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I1(0.0, 1.0);

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorKind::pole, "scattering amplitudes need k > 0 (k = 0 is a Gamma pole)");
  }
}

struct Effective {
  double a;
  double b;
};

Effective effective(double a, double b, Branch branch) {
  if (branch == Branch::parametric) return {b - 0.5, a + 0.5};
  return {a, b};
}

cplx scarf_T(double a, double b, double k) {
  using specfun::gamma;
  const cplx ik = I1 * k;
  const cplx g_half = gamma(0.5 - ik);
  return gamma(-a - ik) * gamma(1.0 + a - ik) * gamma(0.5 - b - ik) * gamma(0.5 + b - ik) /
         (gamma(-ik) * gamma(1.0 - ik) * g_half * g_half);
}

// The bracket multiplying i T in the left-incidence reflection amplitude.
double scarf_reflection_bracket(double a, double b, double k) {
  using specfun::cos_pi;
  using specfun::sin_pi;
  return cos_pi(a) * sin_pi(b) / std::cosh(kPi * k) + sin_pi(a) * cos_pi(b) / std::sinh(kPi * k);
}

}  // namespace

const char* to_string(Incidence i) noexcept { return i == Incidence::left ? "left" : "right"; }
const char* to_string(AmplitudeSource s) noexcept { return s == AmplitudeSource::analytic ? "analytic" : "numeric"; }

cplx analytic_T_real(int N, double k) {
  using specfun::gamma;
  if (N < 1) throw Error(ErrorKind::domain, "analytic_T_real: N must be >= 1");
  require_positive_k(k);
  const cplx ik = I1 * k;
  const double n = N;
  return gamma(-n - ik) * gamma(n - ik + 1.0) / (gamma(1.0 - ik) * gamma(-ik));
}

ScatteringAmplitudes analytic_RT_scarf2(double a, double b, double k, Branch branch, Incidence incidence) {
  require_positive_k(k);
  auto [ae, be] = effective(a, b, branch);
  if (incidence == Incidence::right) be = -be;
  const cplx T = scarf_T(ae, be, k);
  const double bracket = scarf_reflection_bracket(ae, be, k);
  const cplx R = bracket == 0.0 ? cplx(0.0) : T * I1 * bracket;
  return {k, R, T, AmplitudeSource::analytic, incidence, 0.0};
}

cplx zeta(int m, double a, double b, double k) {
  (void)a;  // zeta depends on b only; a is kept for the (m, a, b) signature
  const cplx ik = I1 * k;
  const double one_minus_m = 1.0 - m;
  const cplx num = (b * b - (ik - 0.5) * (ik - 0.5)) + (b - ik + 0.5) * one_minus_m;
  const cplx den = (b * b - (ik + 0.5) * (ik + 0.5)) + (b + ik + 0.5) * one_minus_m;
  if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(num))) {
    throw Error(ErrorKind::pole, "zeta: vanishing denominator");
  }
  return num / den;
}

ScatteringAmplitudes analytic_RT_extended(double a, double b, int m, double k, Branch branch, Incidence incidence) {
  if (m < 0) throw Error(ErrorKind::domain, "analytic_RT_extended: m must be >= 0");
  require_positive_k(k);
  const auto [ae, be] = effective(a, b, branch);
  ScatteringAmplitudes out = analytic_RT_scarf2(ae, be, k, Branch::normal, incidence);
  // When 2b is an integer in [m-1, 2m-2] the denominator polynomial drops to
  // degree 2b+1-m and the potential coincides with that lower extension.
  const int degree = specfun::jacobi_degree(m, {ae - be - 0.5, -ae - be - 1.5});
  const cplx z = zeta(degree, ae, be, k);
  out.T *= z;
  out.R *= z;
  return out;
}

ScatteringAmplitudes partner_RT(const ScatteringAmplitudes& base, const Superpotential& w, SusyRelation relation) {
  require_positive_k(base.k);
  const cplx wm = w.w_minus();
  const cplx wp = w.w_plus();
  if (std::abs(wp * wp - wm * wm) > 1e-12 * std::max(1.0, std::norm(wm))) {
    throw Error(ErrorKind::evanescent, "partner_RT: asymmetric channels (W_+^2 != W_-^2) are not supported");
  }
  const cplx ik = I1 * base.k;
  ScatteringAmplitudes out = base;
  switch (relation) {
    case SusyRelation::partner:
      out.R = (wm - ik) / (wm + ik) * base.R;
      out.T = (wm - ik) / (wp - ik) * base.T;
      break;
    case SusyRelation::pursey: {
      const cplx f = (wm - ik) / (wm + ik);
      out.R = f * f * base.R;
      out.T = -f * base.T;
      break;
    }
    case SusyRelation::abraham_moses:
      out.R = base.R;
      out.T = -(wp + ik) / (wp - ik) * base.T;
      break;
  }
  return out;
}

ScatteringAmplitudes analytic_amplitudes(const PotentialSpec& spec, double k, Incidence incidence) {
  require_positive_k(k);
  auto reflectionless = [&](cplx T) { return ScatteringAmplitudes{k, 0.0, T, AmplitudeSource::analytic, incidence, 0.0}; };

  if (const auto* p = spec.get_if<RealSech>()) return reflectionless(analytic_T_real(p->N, k));
  if (const auto* p = spec.get_if<ScarfII>()) {
    return analytic_RT_scarf2(p->a, p->b, k, p->parametric ? Branch::parametric : Branch::normal, incidence);
  }
  if (const auto* p = spec.get_if<ScarfIIExtended>()) {
    return analytic_RT_extended(p->a, p->b, p->m, k, p->parametric ? Branch::parametric : Branch::normal, incidence);
  }
  // The deformed superpotential keeps W_+- for lambda != 0, -1, so the
  // amplitudes of the undeformed well carry over.
  if (const auto* p = spec.get_if<IsospectralFamily>()) return reflectionless(analytic_T_real(p->N, k));
  if (const auto* p = spec.get_if<Pursey>()) {
    const auto base = PotentialSpec::real_sech(p->N);
    return partner_RT(analytic_amplitudes(base, k, incidence), Superpotential(base, Branch::normal),
                      SusyRelation::pursey);
  }
  if (const auto* p = spec.get_if<AbrahamMoses>()) {
    const auto base = PotentialSpec::real_sech(p->N);
    return partner_RT(analytic_amplitudes(base, k, incidence), Superpotential(base, Branch::normal),
                      SusyRelation::abraham_moses);
  }
  const auto& partner = std::get<PartnerOf>(spec.params());
  return partner_RT(analytic_amplitudes(*partner.base, k, incidence), Superpotential(*partner.base, partner.branch),
                    SusyRelation::partner);
}

ScatteringGrid::ScatteringGrid(const RealToComplex& V, const NumericScatterOptions& options) : options_(options) {
  if (!(options.L > 0.0) || !(options.dx > 0.0) || !(options.tolerance > 0.0) || !(options.tail_tolerance > 0.0)) {
    throw Error(ErrorKind::domain, "numeric_scatter: L, dx and tolerances must be positive");
  }
  const auto steps = static_cast<std::size_t>(std::ceil(2.0 * options.L / options.dx - 1e-9));
  step_ = 2.0 * options.L / static_cast<double>(steps);
  const std::size_t points = 4 * steps + 1;
  const double q = step_ / 4.0;
  v_.resize(points);
  for (std::size_t j = 0; j < points; ++j) {
    const double x = (j + 1 == points) ? options.L : -options.L + static_cast<double>(j) * q;
    try {
      v_[j] = V(x);
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " (grid index " + std::to_string(j) + ")", j);
    }
  }
}

ScatteringGrid::ScatteringGrid(const PotentialSpec& spec, const NumericScatterOptions& options)
    : ScatteringGrid([&spec](double x) { return evaluate(spec, x); }, options) {}

cplx ScatteringGrid::run(double k, bool mirrored, int stride, cplx* B_out) const {
  // Integrate A' = V psi e^{-ikx} / (2ik), B' = -V psi e^{ikx} / (2ik) from
  // x = L (A = 1, B = 0) down to x = -L with step h = stride * step_/4.
  const std::size_t last = v_.size() - 1;
  const double q = step_ / 4.0;
  const double h = -stride * q;
  const cplx inv2ik = 1.0 / (2.0 * I1 * k);
  auto potential = [&](std::size_t j) { return mirrored ? v_[last - j] : v_[j]; };
  auto rhs = [&](std::size_t j, cplx A, cplx B, cplx& dA, cplx& dB) {
    const double x = -options_.L + static_cast<double>(j) * q;
    const cplx e = std::polar(1.0, k * x);
    const cplx psi = A * e + B / e;
    const cplx vp = potential(j) * psi * inv2ik;
    dA = vp / e;
    dB = -vp * e;
  };
  cplx A = 1.0;
  cplx B = 0.0;
  for (std::size_t j = last; j >= static_cast<std::size_t>(stride);) {
    const std::size_t mid = j - static_cast<std::size_t>(stride) / 2;
    const std::size_t end = j - static_cast<std::size_t>(stride);
    cplx a1, b1, a2, b2, a3, b3, a4, b4;
    rhs(j, A, B, a1, b1);
    rhs(mid, A + 0.5 * h * a1, B + 0.5 * h * b1, a2, b2);
    rhs(mid, A + 0.5 * h * a2, B + 0.5 * h * b2, a3, b3);
    rhs(end, A + h * a3, B + h * b3, a4, b4);
    A += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    B += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
    j = end;
    if (j == 0) break;
  }
  *B_out = B;
  return A;
}

ScatteringAmplitudes ScatteringGrid::solve(double k, Incidence incidence) const {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorKind::domain, "numeric_scatter: k must be positive");
  if (options_.dx > std::min(0.25 / k, 1e-2)) {
    throw Error(ErrorKind::domain, "numeric_scatter: dx must not exceed min(0.25/k, 1e-2)");
  }
  const double tail = std::max(std::abs(v_.front()), std::abs(v_.back()));
  if (tail >= options_.tail_tolerance * k * k) {
    throw Error(ErrorKind::domain, "numeric_scatter: potential not negligible at |x| = L; enlarge the domain");
  }
  const bool mirrored = incidence == Incidence::right;
  cplx B_coarse, B_fine;
  const cplx A_coarse = run(k, mirrored, 4, &B_coarse);
  const cplx A_fine = run(k, mirrored, 2, &B_fine);
  const cplx T_coarse = 1.0 / A_coarse, R_coarse = B_coarse / A_coarse;
  const cplx T_fine = 1.0 / A_fine, R_fine = B_fine / A_fine;
  const double change = std::max(std::abs(T_fine - T_coarse), std::abs(R_fine - R_coarse));
  if (!(change < 10.0 * options_.tolerance)) {
    throw Error(ErrorKind::non_convergence, "numeric_scatter: step halving changed the amplitudes by " +
                                                std::to_string(change));
  }
  return {k, R_fine, T_fine, AmplitudeSource::numeric, incidence, change};
}

ScatteringAmplitudes numeric_scatter(const PotentialSpec& spec, double k, Incidence incidence,
                                     const NumericScatterOptions& options) {
  return ScatteringGrid(spec, options).solve(k, incidence);
}

ScatteringAmplitudes numeric_scatter(const RealToComplex& V, double k, Incidence incidence,
                                     const NumericScatterOptions& options) {
  return ScatteringGrid(V, options).solve(k, incidence);
}

}  // namespace rflab

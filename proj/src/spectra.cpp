#include "rflab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rflab/quadrature.hpp"
#include "rflab/specfun.hpp"
#include "rflab/susyqm.hpp"

namespace rflab {

namespace {

constexpr double kNormRange = 40.0;

double sech(double x) { return 1.0 / std::cosh(x); }

double gudermannian(double x) { return std::atan(std::sinh(x)); }

// Scarf-II closed form with effective parameters (a, b):
//   sech^a x exp(-i b gd x) P_n^{(b-a-1/2, -b-a-1/2)}(i sinh x).
struct ScarfClosedForm {
  double a;
  double b;
  int n;

  specfun::JacobiParams params() const { return {b - a - 0.5, -b - a - 0.5}; }

  cplx envelope(double x) const { return std::pow(sech(x), a) * std::polar(1.0, -b * gudermannian(x)); }

  cplx operator()(double x) const { return envelope(x) * specfun::jacobi(n, params(), cplx(0.0, std::sinh(x))); }

  // A psi with W = a tanh + i b sech: the envelope is annihilated, leaving
  // envelope * i cosh x * P_n'(i sinh x).
  cplx lowered(double x) const {
    return envelope(x) * cplx(0.0, std::cosh(x)) * specfun::jacobi_derivative(n, params(), cplx(0.0, std::sinh(x)));
  }
};

struct Effective {
  double a;
  double b;
};

Effective effective(double a, double b, bool parametric) {
  if (parametric) return {b - 0.5, a + 0.5};
  return {a, b};
}

std::vector<double> scarf_levels(double a_eff) {
  std::vector<double> e;
  for (int n = 0; n < a_eff; ++n) e.push_back(-(a_eff - n) * (a_eff - n));
  return e;
}

std::vector<double> real_levels(int N) {
  std::vector<double> e;
  for (int n = 0; n < N; ++n) e.push_back(-static_cast<double>(N - n) * (N - n));
  return e;
}

std::vector<double> drop_ground(std::vector<double> e) {
  if (!e.empty()) e.erase(e.begin());
  return e;
}

void check_index(int n, std::size_t count, const PotentialSpec& spec) {
  if (n < 0 || static_cast<std::size_t>(n) >= count) {
    throw Error(ErrorKind::index, "state " + std::to_string(n) + " does not exist for " + spec.describe() + " (" +
                                      std::to_string(count) + " bound states)");
  }
}

// L2-normalizes `raw` and fixes the global phase.
BoundState normalized(int n, double energy, RealToComplex raw) {
  const double norm2 = norm_squared(raw, -kNormRange, kNormRange);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorKind::singular, "eigenfunction is not normalizable");
  }
  cplx ref = raw(0.0);
  if (std::abs(ref) < 1e-10 * std::sqrt(norm2)) ref = raw(1.0);
  const cplx phase = std::abs(ref) > 0.0 ? std::conj(ref) / std::abs(ref) : cplx(1.0);
  const cplx c = phase / std::sqrt(norm2);
  return BoundState{n, energy, [raw = std::move(raw), c](double x) { return c * raw(x); }, c};
}

int real_family_N(const PotentialSpec& spec) {
  if (const auto* p = spec.get_if<RealSech>()) return p->N;
  if (const auto* p = spec.get_if<IsospectralFamily>()) return p->N;
  if (const auto* p = spec.get_if<Pursey>()) return p->N;
  if (const auto* p = spec.get_if<AbrahamMoses>()) return p->N;
  return 0;
}

// Ground state (n = 0) or excited state n >= 1 of the lambda-deformed well.
// lambda = 0 and -1 are admitted here for the Pursey and AM potentials.
BoundState deformed_state(int N, double lambda, int n) {
  const double c_n = real_sech_norm(N, n);
  const ScarfClosedForm base{static_cast<double>(N), 0.0, n};
  const double energy = -static_cast<double>(N - n) * (N - n);
  if (std::isinf(lambda)) {
    return BoundState{n, energy, [base, c_n](double x) { return c_n * base(x); }, c_n};
  }
  const IsospectralIntegral integral(N);
  if (n == 0) {
    const double pref = std::sqrt(lambda * (1.0 + lambda));
    const double c = pref * c_n;
    return BoundState{n, energy,
                      [base, integral, lambda, c](double x) { return c * base(x) / integral.shifted(lambda, x); },
                      c};
  }
  // psi + (1/(E_n - E_0)) (I'/(I + lambda)) A psi; the excitation energy is
  // measured from the ground state, where A^dagger A = H - E_0.
  const double excitation = static_cast<double>(N) * N - static_cast<double>(N - n) * (N - n);
  return BoundState{n, energy,
                    [base, integral, lambda, excitation, c_n](double x) {
                      const double g = integral.derivative(x) / integral.shifted(lambda, x);
                      return c_n * (base(x) + g / excitation * base.lowered(x));
                    },
                    c_n};
}

}  // namespace

double real_sech_norm(int N, int n) {
  const double num = std::tgamma(n + 1.0) * (N - n) * std::pow(std::tgamma(N - n + 0.5), 2);
  const double den = std::tgamma(2.0 * N - n + 1.0) * std::numbers::pi;
  return std::ldexp(std::sqrt(num / den), N);
}

std::vector<double> bound_energies(const PotentialSpec& spec) {
  struct Visitor {
    std::vector<double> operator()(const RealSech& p) const { return real_levels(p.N); }
    std::vector<double> operator()(const ScarfII& p) const { return scarf_levels(effective(p.a, p.b, p.parametric).a); }
    std::vector<double> operator()(const ScarfIIExtended& p) const {
      return scarf_levels(effective(p.a, p.b, p.parametric).a);
    }
    std::vector<double> operator()(const IsospectralFamily& p) const { return real_levels(p.N); }
    std::vector<double> operator()(const Pursey& p) const { return drop_ground(real_levels(p.N)); }
    std::vector<double> operator()(const AbrahamMoses& p) const { return drop_ground(real_levels(p.N)); }
    std::vector<double> operator()(const PartnerOf& p) const {
      if (const auto* s = p.base->get_if<ScarfII>()) {
        return drop_ground(scarf_levels(effective(s->a, s->b, p.branch == Branch::parametric).a));
      }
      return drop_ground(real_levels(real_family_N(*p.base)));
    }
  };
  return std::visit(Visitor{}, spec.params());
}

BoundState eigenfunction(const PotentialSpec& spec, int n) {
  const auto energies = bound_energies(spec);
  check_index(n, energies.size(), spec);
  const double energy = energies[static_cast<std::size_t>(n)];

  if (const auto* p = spec.get_if<RealSech>()) {
    const double c = real_sech_norm(p->N, n);
    const ScarfClosedForm f{static_cast<double>(p->N), 0.0, n};
    return BoundState{n, energy, [f, c](double x) { return c * f(x); }, c};
  }
  if (const auto* p = spec.get_if<ScarfII>()) {
    const auto [a, b] = effective(p->a, p->b, p->parametric);
    return normalized(n, energy, ScarfClosedForm{a, b, n});
  }
  if (const auto* p = spec.get_if<ScarfIIExtended>()) {
    const auto [a, b] = effective(p->a, p->b, p->parametric);
    const int m = p->m;
    const ScarfClosedForm env{a, b, 0};
    const specfun::JacobiParams jp = env.params();
    return normalized(n, energy, [env, jp, n, m](double x) {
      const cplx z(0.0, std::sinh(x));
      return env.envelope(x) * specfun::exceptional_jacobi(n, m, jp, z) /
             specfun::jacobi(m, {-jp.alpha - 1.0, jp.beta - 1.0}, z);
    });
  }
  if (const auto* p = spec.get_if<IsospectralFamily>()) return family_eigenfunction(p->N, p->lambda, n);
  if (const auto* p = spec.get_if<Pursey>()) {
    BoundState s = deformed_state(p->N, 0.0, n + 1);
    s.n = n;
    return s;
  }
  if (const auto* p = spec.get_if<AbrahamMoses>()) {
    BoundState s = deformed_state(p->N, -1.0, n + 1);
    s.n = n;
    return s;
  }
  const auto& partner = std::get<PartnerOf>(spec.params());
  // psi^(2)_n is proportional to A psi^(1)_{n+1}.
  ScarfClosedForm upper{0.0, 0.0, n + 1};
  if (const auto* s = partner.base->get_if<ScarfII>()) {
    const auto [a, b] = effective(s->a, s->b, partner.branch == Branch::parametric);
    upper = {a, b, n + 1};
  } else {
    upper = {static_cast<double>(real_family_N(*partner.base)), 0.0, n + 1};
  }
  return normalized(n, energy, [upper](double x) { return upper.lowered(x); });
}

BoundState family_eigenfunction(int N, double lambda, int n) {
  if (N < 1) throw Error(ErrorKind::domain, "family_eigenfunction: N must be >= 1");
  if (std::isnan(lambda) || (lambda >= -1.0 && lambda <= 0.0)) {
    throw Error(ErrorKind::domain, "family_eigenfunction: lambda must be > 0 or < -1");
  }
  if (n < 0 || n >= N) {
    throw Error(ErrorKind::index, "family_eigenfunction: state " + std::to_string(n) + " does not exist for N = " +
                                      std::to_string(N));
  }
  return deformed_state(N, lambda, n);
}

double schrodinger_residual(const RealToComplex& V, double E, const RealToComplex& psi, double x_min, double x_max,
                            double dx) {
  if (!(dx > 0.0) || !(x_max > x_min)) throw Error(ErrorKind::domain, "schrodinger_residual: bad grid");
  const auto count = static_cast<std::size_t>(std::floor((x_max - x_min) / dx + 0.5)) + 1;
  if (count < 5) throw Error(ErrorKind::domain, "schrodinger_residual: grid needs at least five points");
  std::vector<cplx> f(count);
  double peak = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    f[i] = psi(x_min + static_cast<double>(i) * dx);
    peak = std::max(peak, std::abs(f[i]));
  }
  if (peak == 0.0) return 0.0;
  double worst = 0.0;
  const double inv = 1.0 / (12.0 * dx * dx);
  for (std::size_t i = 2; i + 2 < count; ++i) {
    const double x = x_min + static_cast<double>(i) * dx;
    const cplx d2 = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * inv;
    worst = std::max(worst, std::abs(-d2 + (V(x) - E) * f[i]));
  }
  return worst / peak;
}

double norm_squared(const RealToComplex& psi, double x_min, double x_max) {
  return integrate([&](double x) { return std::norm(psi(x)); }, x_min, x_max);
}

}  // namespace rflab

#include "rflab/potentials.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "rflab/specfun.hpp"
#include "rflab/susyqm.hpp"

namespace rflab {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void require_N(int N, const char* family) {
  if (N < 1) throw Error(ErrorKind::domain, std::string(family) + ": N must be >= 1, got " + std::to_string(N));
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::domain, std::string(what) + " must be finite");
}

// Effective (a, b) after the optional parametric substitution.
std::pair<double, double> effective(double a, double b, bool parametric) {
  if (parametric) return {b - 0.5, a + 0.5};
  return {a, b};
}

}  // namespace

const char* to_string(Branch b) noexcept { return b == Branch::normal ? "normal" : "parametric"; }

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::real_sech: return "realsech";
    case Family::scarf2: return "scarf2";
    case Family::scarf2_extended: return "scarf2ext";
    case Family::isospectral_family: return "isofamily";
    case Family::pursey: return "pursey";
    case Family::abraham_moses: return "am";
    case Family::partner_of: return "partner";
  }
  return "unknown";
}

PotentialSpec PotentialSpec::real_sech(int N) {
  require_N(N, "realsech");
  return PotentialSpec(RealSech{N});
}

PotentialSpec PotentialSpec::scarf2(double a, double b, Branch branch) {
  require_finite(a, "scarf2 a");
  require_finite(b, "scarf2 b");
  return PotentialSpec(ScarfII{a, b, branch == Branch::parametric});
}

PotentialSpec PotentialSpec::scarf2_extended(double a, double b, int m, Branch branch) {
  require_finite(a, "scarf2ext a");
  require_finite(b, "scarf2ext b");
  if (m < 0) throw Error(ErrorKind::domain, "scarf2ext: m must be >= 0");
  return PotentialSpec(ScarfIIExtended{a, b, m, branch == Branch::parametric});
}

PotentialSpec PotentialSpec::isospectral_family(int N, double lambda) {
  require_N(N, "isofamily");
  if (std::isnan(lambda) || (lambda >= -1.0 && lambda <= 0.0)) {
    throw Error(ErrorKind::domain, "isofamily: lambda must be > 0 or < -1, got " + num(lambda));
  }
  return PotentialSpec(IsospectralFamily{N, lambda});
}

PotentialSpec PotentialSpec::pursey(int N) {
  require_N(N, "pursey");
  return PotentialSpec(Pursey{N});
}

PotentialSpec PotentialSpec::abraham_moses(int N) {
  require_N(N, "am");
  return PotentialSpec(AbrahamMoses{N});
}

PotentialSpec PotentialSpec::partner_of(const PotentialSpec& base, Branch branch) {
  (void)Superpotential(base, branch);  // throws for families without a factorization
  return PotentialSpec(PartnerOf{std::make_shared<const PotentialSpec>(base), branch});
}

Family PotentialSpec::family() const noexcept { return static_cast<Family>(params_.index()); }

std::string PotentialSpec::describe() const {
  struct Visitor {
    std::string operator()(const RealSech& p) const { return "realsech(N=" + std::to_string(p.N) + ")"; }
    std::string operator()(const ScarfII& p) const {
      return "scarf2(a=" + num(p.a) + ",b=" + num(p.b) + "," + (p.parametric ? "parametric" : "normal") + ")";
    }
    std::string operator()(const ScarfIIExtended& p) const {
      return "scarf2ext(a=" + num(p.a) + ",b=" + num(p.b) + ",m=" + std::to_string(p.m) + "," +
             (p.parametric ? "parametric" : "normal") + ")";
    }
    std::string operator()(const IsospectralFamily& p) const {
      return "isofamily(N=" + std::to_string(p.N) + ",lambda=" + num(p.lambda) + ")";
    }
    std::string operator()(const Pursey& p) const { return "pursey(N=" + std::to_string(p.N) + ")"; }
    std::string operator()(const AbrahamMoses& p) const { return "am(N=" + std::to_string(p.N) + ")"; }
    std::string operator()(const PartnerOf& p) const {
      return std::string("partner(") + p.base->describe() + "," + to_string(p.branch) + ")";
    }
  };
  return std::visit(Visitor{}, params_);
}

GridFunction::GridFunction(double x0_, double dx_, std::vector<cplx> values_)
    : x0(x0_), dx(dx_), values(std::move(values_)) {
  if (!(dx > 0.0)) throw Error(ErrorKind::domain, "grid spacing must be positive");
  if (values.size() < 2) throw Error(ErrorKind::domain, "grid needs at least two points");
}

double eval_real_sech(int N, double x) {
  const double s = sech(x);
  return -static_cast<double>(N) * (N + 1) * s * s;
}

cplx eval_scarf2(double a, double b, double x) {
  const double s = sech(x);
  return {-(b * b + a * (a + 1.0)) * s * s, b * (2.0 * a + 1.0) * s * std::tanh(x)};
}

cplx eval_scarf2_parametric(double a, double b, double x) { return eval_scarf2(b - 0.5, a + 0.5, x); }

cplx eval_scarf2_extended(double a, double b, int m, double x, bool parametric) {
  if (m < 0) throw Error(ErrorKind::domain, "scarf2ext: m must be >= 0");
  std::tie(a, b) = effective(a, b, parametric);
  const cplx base = eval_scarf2(a, b, x);
  if (m == 0) return base;

  const double alpha = b - a - 0.5;
  const double beta = -b - a - 0.5;
  const double sh = std::sinh(x);
  const cplx z(0.0, sh);
  const specfun::JacobiParams pd{-alpha - 1.0, beta - 1.0};
  const cplx den = specfun::jacobi(m, pd, z);
  if (std::abs(den) < 1e-12 * std::pow(std::max(1.0, std::abs(sh)), specfun::jacobi_degree(m, pd))) {
    throw Error(ErrorKind::singular, "scarf2ext: P_m^(-alpha-1,beta-1)(i sinh x) vanishes at x = " + num(x));
  }
  const cplx ratio = specfun::jacobi(m - 1, {-alpha, beta}, z) / den;
  const double c = 2.0 * b - m + 1.0;
  const double ch = std::cosh(x);
  return base + 2.0 * m * c + c * cplx(-2.0 * a - 1.0, (2.0 * b + 1.0) * sh) * ratio -
         0.5 * c * c * ch * ch * ratio * ratio;
}

namespace {

double deformed_real_well(int N, double lambda, double x) {
  const double v = eval_real_sech(N, x);
  if (std::isinf(lambda)) return v;
  const IsospectralIntegral integral(N);
  const double d = integral.shifted(lambda, x);
  const double r = integral.derivative(x) / d;
  return v - 2.0 * (integral.second_derivative(x) / d - r * r);
}

}  // namespace

double eval_isospectral_family(int N, double lambda, double x) {
  require_N(N, "isofamily");
  if (lambda == 0.0) return eval_pursey_am(N, IsospectralLimit::pursey, x);
  if (lambda == -1.0) return eval_pursey_am(N, IsospectralLimit::abraham_moses, x);
  if (std::isnan(lambda) || (lambda > -1.0 && lambda < 0.0)) {
    throw Error(ErrorKind::domain, "isofamily: lambda in (-1, 0) does not give a regular potential");
  }
  return deformed_real_well(N, lambda, x);
}

double eval_pursey_am(int N, IsospectralLimit which, double x) {
  require_N(N, which == IsospectralLimit::pursey ? "pursey" : "am");
  return deformed_real_well(N, which == IsospectralLimit::pursey ? 0.0 : -1.0, x);
}

cplx partner_potential(const PotentialSpec& base, Branch branch, double x) {
  if (const auto* p = base.get_if<ScarfII>()) {
    // Shape invariance: a -> a-1 (normal), b -> b-1 (parametric).
    return branch == Branch::normal ? eval_scarf2(p->a - 1.0, p->b, x) : eval_scarf2(p->a, p->b - 1.0, x);
  }
  if (branch == Branch::parametric) {
    throw Error(ErrorKind::unsupported, "parametric partner exists only for scarf2, got " + base.describe());
  }
  int N = 0;
  if (const auto* p = base.get_if<RealSech>()) N = p->N;
  if (const auto* p = base.get_if<IsospectralFamily>()) N = p->N;
  if (const auto* p = base.get_if<Pursey>()) N = p->N;
  if (const auto* p = base.get_if<AbrahamMoses>()) N = p->N;
  if (N == 0) throw Error(ErrorKind::unsupported, "no SUSY partner for " + base.describe());
  // Every member of the real family shares the partner -(N-1)N sech^2.
  return N == 1 ? 0.0 : eval_real_sech(N - 1, x);
}

cplx evaluate(const PotentialSpec& spec, double x) {
  struct Visitor {
    double x;
    cplx operator()(const RealSech& p) const { return eval_real_sech(p.N, x); }
    cplx operator()(const ScarfII& p) const { return eval_scarf2(p.a, p.b, x); }
    cplx operator()(const ScarfIIExtended& p) const { return eval_scarf2_extended(p.a, p.b, p.m, x, p.parametric); }
    cplx operator()(const IsospectralFamily& p) const { return eval_isospectral_family(p.N, p.lambda, x); }
    cplx operator()(const Pursey& p) const { return eval_pursey_am(p.N, IsospectralLimit::pursey, x); }
    cplx operator()(const AbrahamMoses& p) const { return eval_pursey_am(p.N, IsospectralLimit::abraham_moses, x); }
    cplx operator()(const PartnerOf& p) const { return partner_potential(*p.base, p.branch, x); }
  };
  return std::visit(Visitor{x}, spec.params());
}

GridFunction sample(const PotentialSpec& spec, double x0, double dx, std::size_t count) {
  if (!(dx > 0.0) || count < 2) throw Error(ErrorKind::domain, "sample: need dx > 0 and count >= 2");
  std::vector<cplx> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = x0 + static_cast<double>(i) * dx;
    try {
      values[i] = evaluate(spec, x);
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " (grid index " + std::to_string(i) + ")", i);
    }
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw Error(ErrorKind::singular, "sample: non-finite value at grid index " + std::to_string(i), i);
    }
  }
  return GridFunction(x0, dx, std::move(values));
}

}  // namespace rflab

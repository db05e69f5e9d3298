#include "rflab/susyqm.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace rflab {

namespace {

// Below this |x| the reduction form is used on both sides of the origin.
constexpr double kTailSwitch = 0.5;

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

IsospectralIntegral::IsospectralIntegral(int N) : N_(N) {
  if (N < 1) throw Error(ErrorKind::domain, "isospectral integral needs N >= 1");
  c0_sq_ = std::tgamma(N + 0.5) / (std::sqrt(std::numbers::pi) * std::tgamma(static_cast<double>(N)));

  // Antiderivative F_N = tanh * sum_j f_j sech^{2j}, built by the reduction.
  std::vector<double> f{1.0};
  for (int k = 2; k <= N; ++k) {
    const double scale = (2.0 * k - 2.0) / (2.0 * k - 1.0);
    for (double& c : f) c *= scale;
    f.push_back(1.0 / (2.0 * k - 1.0));
  }
  // I = (F_N(x) + F_N(inf)) / (2 F_N(inf)), F_N(inf) = f_0.
  q_.resize(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) q_[j] = f[j] / (2.0 * f[0]);

  // 1 - I(y) = C0^2 int_0^w (s(2-s))^{N-1} ds.
  tail_.resize(N);
  double binom = 1.0;
  for (int j = 0; j < N; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    tail_[j] = c0_sq_ * sign * binom * std::ldexp(1.0, N - 1 - j) / (N + j);
    binom = binom * (N - 1 - j) / (j + 1);
  }
}

double IsospectralIntegral::reduction(double x) const {
  const double s2 = sech(x) * sech(x);
  double poly = 0.0;
  for (auto it = q_.rbegin(); it != q_.rend(); ++it) poly = poly * s2 + *it;
  return 0.5 + std::tanh(x) * poly;
}

double IsospectralIntegral::upper_tail(double y) const {
  if (y < kTailSwitch) return 1.0 - reduction(y);
  const double e = std::exp(-2.0 * y);
  const double w = 2.0 * e / (1.0 + e);
  double sum = 0.0;
  for (auto it = tail_.rbegin(); it != tail_.rend(); ++it) sum = sum * w + *it;
  return sum * std::pow(w, N_);
}

double IsospectralIntegral::operator()(double x) const {
  if (x < 0.0) return upper_tail(-x);
  return reduction(x);
}

double IsospectralIntegral::complement(double x) const {
  if (x >= 0.0) return upper_tail(x);
  return (*this)(-x);
}

double IsospectralIntegral::shifted(double lambda, double x) const {
  if (std::isinf(lambda)) return lambda;
  if (lambda >= -0.5) return lambda + (*this)(x);
  return (1.0 + lambda) - complement(x);
}

double IsospectralIntegral::derivative(double x) const {
  return c0_sq_ * std::pow(sech(x), 2 * N_);
}

double IsospectralIntegral::second_derivative(double x) const {
  return -2.0 * N_ * std::tanh(x) * derivative(x);
}

double isospectral_integral(int N, double x) { return IsospectralIntegral(N)(x); }

Superpotential::Superpotential(const PotentialSpec& spec, Branch branch) : branch_(branch) {
  if (branch == Branch::parametric && !spec.get_if<ScarfII>()) {
    throw Error(ErrorKind::unsupported, "parametric superpotential exists only for scarf2, got " + spec.describe());
  }
  auto real_well = [&](int N, std::optional<double> lambda) {
    c_tanh_ = N;
    e0_ = -static_cast<double>(N) * N;
    w_minus_ = -static_cast<double>(N);
    w_plus_ = static_cast<double>(N);
    if (lambda && !std::isinf(*lambda)) {
      integral_.emplace(N);
      lambda_ = *lambda;
      // d/dx ln(I + lambda) -> 2N at -inf when lambda = 0 and -> -2N at +inf
      // when lambda = -1; it vanishes at both ends otherwise.
      if (lambda_ == 0.0) w_minus_ = static_cast<double>(N);
      if (lambda_ == -1.0) w_plus_ = -static_cast<double>(N);
    }
  };

  if (const auto* p = spec.get_if<RealSech>()) {
    real_well(p->N, std::nullopt);
  } else if (const auto* p = spec.get_if<ScarfII>()) {
    if (branch == Branch::normal) {
      c_tanh_ = p->a;
      c_sech_ = p->b;
    } else {
      c_tanh_ = p->b - 0.5;
      c_sech_ = p->a + 0.5;
    }
    e0_ = -c_tanh_ * c_tanh_;
    w_minus_ = -c_tanh_;
    w_plus_ = c_tanh_;
  } else if (const auto* p = spec.get_if<IsospectralFamily>()) {
    real_well(p->N, p->lambda);
  } else if (const auto* p = spec.get_if<Pursey>()) {
    real_well(p->N, 0.0);
  } else if (const auto* p = spec.get_if<AbrahamMoses>()) {
    real_well(p->N, -1.0);
  } else {
    throw Error(ErrorKind::unsupported, "no superpotential for " + spec.describe());
  }
}

double Superpotential::deformation(double x) const {
  if (!integral_) return 0.0;
  return integral_->derivative(x) / integral_->shifted(lambda_, x);
}

double Superpotential::deformation_derivative(double x) const {
  if (!integral_) return 0.0;
  const double d = integral_->shifted(lambda_, x);
  const double r = integral_->derivative(x) / d;
  return integral_->second_derivative(x) / d - r * r;
}

cplx Superpotential::operator()(double x) const {
  return cplx(c_tanh_ * std::tanh(x) + deformation(x), c_sech_ * sech(x));
}

cplx Superpotential::derivative(double x) const {
  const double s = sech(x);
  return cplx(c_tanh_ * s * s + deformation_derivative(x), -c_sech_ * s * std::tanh(x));
}

Superpotential superpotential(const PotentialSpec& spec, Branch branch) { return Superpotential(spec, branch); }

cplx central_derivative(const RealToComplex& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

RealToComplex apply_A(const Superpotential& w, RealToComplex f, RealToComplex df) {
  return [w, f = std::move(f), df = std::move(df)](double x) {
    const cplx d = df ? df(x) : central_derivative(f, x);
    return d + w(x) * f(x);
  };
}

RealToComplex apply_A_dagger(const Superpotential& w, RealToComplex f, RealToComplex df) {
  return [w, f = std::move(f), df = std::move(df)](double x) {
    const cplx d = df ? df(x) : central_derivative(f, x);
    return -d + w(x) * f(x);
  };
}

}  // namespace rflab

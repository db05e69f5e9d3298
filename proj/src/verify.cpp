#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <set>

#include "rflab/catalog.hpp"
#include "rflab/cli.hpp"
#include "rflab/parallel.hpp"
#include "rflab/specfun.hpp"
#include "rflab/spectra.hpp"
#include "rflab/susyqm.hpp"

namespace rflab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : report_(r) {}

  // pass when value <= tolerance
  void below(const std::string& name, double value, double tolerance) {
    add({name, value, tolerance, std::isfinite(value) && value <= tolerance});
  }
  void strictly_below(const std::string& name, double value, double tolerance) {
    add({name, value, tolerance, std::isfinite(value) && value < tolerance});
  }
  void equal(const std::string& name, double value, double expected) {
    add({name, value, 0.0, value == expected});
  }
  // Runs `body`; an exception becomes a failed check carrying the message.
  template <class F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add({name + " [" + e.what() + "]", std::nan(""), 0.0, false});
    }
  }

 private:
  void add(Check c) {
    std::lock_guard lock(mutex_);
    report_.checks.push_back(std::move(c));
  }
  VerifyReport& report_;
  std::mutex mutex_;
};

double sech(double x) { return 1.0 / std::cosh(x); }

std::string pair_text(double a, double b) { return "[" + label_number(a) + "," + label_number(b) + "]"; }

template <class F>
double max_over(double x0, double x1, int points, F&& f) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i) worst = std::max(worst, f(x0 + (x1 - x0) * i / (points - 1)));
  return worst;
}

// Closed forms for the N = 3 illustration.
double integral_n3(double x) {
  const double s2 = sech(x) * sech(x);
  return (8.0 + (8.0 + 4.0 * s2 + 3.0 * s2 * s2) * std::tanh(x)) / 16.0;
}

double family_potential_n3(double x, double l) {
  const double s = sech(x), t = std::tanh(x), s2 = s * s;
  const double d = 8.0 + 16.0 * l + (8.0 + 4.0 * s2 + 3.0 * s2 * s2) * t;
  const double inner = (1.0 + 3.0 * std::cosh(2 * x) + std::cosh(4 * x)) * std::pow(s, 6) + 16.0 * t * (1.0 + 2.0 * l + t);
  return 6.0 * s2 * (-2.0 + 15.0 * s2 * s2 * inner / (d * d));
}

double family_ground_n3(double x, double l) {
  const double s = sech(x), s2 = s * s;
  return 4.0 * std::sqrt(15.0 * l * (l + 1.0)) * s * s2 /
         (8.0 + 16.0 * l + (8.0 + 4.0 * s2 + 3.0 * s2 * s2) * std::tanh(x));
}

// sign = +1 Pursey, -1 Abraham-Moses
double pursey_am_n3(double x, double sign) {
  const double c2 = std::cosh(2 * x), s2x = std::sinh(2 * x);
  const double num = 25.0 * c2 + 13.0 * std::cosh(4 * x) - sign * 3.0 * (-sign * 5.0 + 5.0 * s2x + 4.0 * std::sinh(4 * x));
  const double den = 5.0 + 11.0 * c2 - sign * 9.0 * s2x;
  return -24.0 * sech(x) * sech(x) * num / (den * den);
}

struct Labelled {
  std::string label;
  PotentialSpec spec;
};

// Every closed-form eigenfunction family at N = 3.
std::vector<Labelled> n3_matrix() {
  std::vector<Labelled> out;
  out.push_back({"realsech", PotentialSpec::real_sech(3)});
  out.push_back({"partner realsech", PotentialSpec::partner_of(PotentialSpec::real_sech(3))});
  out.push_back({"pursey", PotentialSpec::pursey(3)});
  out.push_back({"am", PotentialSpec::abraham_moses(3)});
  for (double l : {0.1, 5.0, -1.1, -5.0}) {
    out.push_back({"isofamily lambda=" + label_number(l), PotentialSpec::isospectral_family(3, l)});
  }
  for (const auto& e : enumerate(3, 1)) out.push_back({e.spec.describe(), e.spec});
  for (auto [a, b] : reflectionless_pairs(3)) {
    const auto valid = branch_validity(a, b);
    if (valid.normal) out.push_back({"scarf2 normal", PotentialSpec::scarf2(a, b, Branch::normal)});
    if (valid.parametric) out.push_back({"scarf2 parametric", PotentialSpec::scarf2(a, b, Branch::parametric)});
    const auto base = PotentialSpec::scarf2(a, b);
    if (spectrum_split(a, b).from_normal >= 2) out.push_back({"partner", PotentialSpec::partner_of(base, Branch::normal)});
    if (spectrum_split(a, b).from_parametric >= 2) {
      out.push_back({"partner", PotentialSpec::partner_of(base, Branch::parametric)});
    }
  }
  for (auto& l : out) l.label = l.spec.describe();
  return out;
}

void suite_n3(Recorder& r) {
  r.guarded("spectrum realsech(3)", [&] {
    const auto e = bound_energies(PotentialSpec::real_sech(3));
    r.equal("spectrum realsech(3) == [-9,-4,-1]", e == std::vector<double>{-9, -4, -1} ? 1.0 : 0.0, 1.0);
  });
  r.guarded("spectrum pursey/am(3)", [&] {
    const auto p = bound_energies(PotentialSpec::pursey(3));
    const auto am = bound_energies(PotentialSpec::abraham_moses(3));
    const std::vector<double> want{-4, -1};
    r.equal("spectrum pursey(3) == am(3) == [-4,-1]", p == want && am == want ? 1.0 : 0.0, 1.0);
  });
  r.guarded("realsech minimum", [&] {
    r.below("realsech(3) V(0) + 12", std::abs(evaluate(PotentialSpec::real_sech(3), 0.0).real() + 12.0), 0.0);
  });
  r.guarded("realsech ground peak", [&] {
    const auto s = eigenfunction(PotentialSpec::real_sech(3), 0);
    r.below("realsech(3) |psi0(0) - sqrt(15)/4|", std::abs(s(0.0) - std::sqrt(15.0) / 4.0), 1e-13);
  });
  r.guarded("I(x)", [&] {
    const IsospectralIntegral I(3);
    r.below("I(x) vs closed form, 1000 points on [-10,10]",
            max_over(-10, 10, 1000, [&](double x) { return std::abs(I(x) - integral_n3(x)); }), 1e-13);
  });
  for (double l : {0.1, 5.0, -1.1}) {
    const std::string tag = " lambda=" + label_number(l);
    r.guarded("family" + tag, [&] {
      const auto spec = PotentialSpec::isospectral_family(3, l);
      r.below("family potential vs closed form" + tag, max_over(-8, 8, 801, [&](double x) {
                return std::abs(evaluate(spec, x).real() - family_potential_n3(x, l));
              }), 1e-10);
      const Superpotential w(spec, Branch::normal);
      r.below("W^2 + W' + E0 == -6 sech^2" + tag, max_over(-8, 8, 801, [&](double x) {
                const cplx v = w(x) * w(x) + w.derivative(x) + w.ground_energy();
                return std::abs(v + 6.0 * sech(x) * sech(x));
              }), 1e-8);
      const auto g = eigenfunction(spec, 0);
      r.below("family ground state vs closed form" + tag, max_over(-10, 10, 801, [&](double x) {
                return std::abs(g(x) - family_ground_n3(x, l));
              }), 1e-12);
    });
  }
  r.guarded("pursey/am closed form", [&] {
    const auto p = PotentialSpec::pursey(3);
    const auto am = PotentialSpec::abraham_moses(3);
    r.below("pursey(3) vs closed form", max_over(-8, 8, 801, [&](double x) {
              return std::abs(evaluate(p, x).real() - pursey_am_n3(x, 1.0));
            }), 1e-10);
    r.below("am(3) vs closed form", max_over(-8, 8, 801, [&](double x) {
              return std::abs(evaluate(am, x).real() - pursey_am_n3(x, -1.0));
            }), 1e-10);
  });
  r.guarded("partner realsech", [&] {
    const auto partner = PotentialSpec::partner_of(PotentialSpec::real_sech(3));
    r.below("partner(realsech(3)) == -6 sech^2", max_over(-8, 8, 801, [&](double x) {
              return std::abs(evaluate(partner, x) + 6.0 * sech(x) * sech(x));
            }), 1e-12);
    const auto g = eigenfunction(partner, 0);
    r.below("partner ground state == sqrt(3)/2 sech^2", max_over(-10, 10, 801, [&](double x) {
              return std::abs(g(x) - std::sqrt(3.0) / 2.0 * sech(x) * sech(x));
            }), 1e-8);
  });

  // Schrodinger residuals of every closed-form eigenfunction.
  const auto matrix = n3_matrix();
  std::vector<std::pair<std::size_t, int>> states;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const int count = static_cast<int>(bound_energies(matrix[i].spec).size());
    for (int n = 0; n < count; ++n) states.emplace_back(i, n);
  }
  parallel_for(states.size(), [&](std::size_t j) {
    const auto& [i, n] = states[j];
    const auto& spec = matrix[i].spec;
    const std::string name = "residual " + matrix[i].label + " n=" + std::to_string(n);
    r.guarded(name, [&] {
      const auto s = eigenfunction(spec, n);
      const double res = schrodinger_residual([&](double x) { return evaluate(spec, x); }, s.energy, s.wavefunction,
                                              -12.0, 12.0, 1e-3);
      r.strictly_below(name, res, 1e-6);
    });
  });

  r.guarded("catalog", [&] {
    r.equal("|enumerate(3,0)|", static_cast<double>(enumerate(3, 0).size()), 6.0);
    r.equal("|enumerate(3,1)|", static_cast<double>(enumerate(3, 1).size()), 16.0);
    const std::vector<std::pair<double, double>> want{{2.5, 0.5}, {1.5, 1.5}, {0.5, 2.5}, {2, 1}, {1, 2}, {0, 3}};
    std::vector<std::pair<double, double>> got;
    for (const auto& e : enumerate(3, 0)) got.emplace_back(e.a, e.b);
    r.equal("enumerate(3,0) pairs", got == want ? 1.0 : 0.0, 1.0);
    for (const auto& e : enumerate(3, 0)) {
      const auto split = spectrum_split(e.a, e.b);
      std::set<double> levels;
      for (int n = 0; n < split.from_normal; ++n) levels.insert(-(e.a - n) * (e.a - n));
      for (int n = 0; n < split.from_parametric; ++n) levels.insert(-(e.b - 0.5 - n) * (e.b - 0.5 - n));
      r.equal("combined levels of " + pair_text(e.a, e.b), static_cast<double>(levels.size()), 3.0);
      r.below("parametric invariance of " + pair_text(e.a, e.b), max_over(-5, 5, 1001, [&](double x) {
                return std::abs(eval_scarf2(e.a, e.b, x) - eval_scarf2_parametric(e.a, e.b, x));
              }), 1e-13);
    }
  });
  r.guarded("analytic R", [&] {
    double worst = 0.0;
    for (const auto& e : enumerate(3, 1)) {
      for (double k : {0.5, 1.0, 2.0, 4.0}) {
        for (auto inc : {Incidence::left, Incidence::right}) {
          worst = std::max(worst, std::abs(analytic_amplitudes(e.spec, k, inc).R));
        }
      }
    }
    r.equal("max analytic |R| over catalog(3,1)", worst, 0.0);
  });
}

void suite_count(Recorder& r, int N, int m) {
  r.guarded("count", [&] {
    r.equal("|enumerate(" + std::to_string(N) + "," + std::to_string(m) + ")|",
            static_cast<double>(enumerate(N, m).size()), static_cast<double>(expected_count(N, m)));
    long long bad = 0;
    for (int n = 1; n <= 6; ++n) {
      for (int mm = 0; mm <= 4; ++mm) bad += static_cast<long long>(enumerate(n, mm).size()) != expected_count(n, mm);
    }
    r.equal("count formula mismatches for N in 1..6, m in 0..4", static_cast<double>(bad), 0.0);
  });
}

void suite_scattering(Recorder& r, int N, int m, bool quick) {
  const std::vector<double> ks = quick ? std::vector<double>{1.0, 2.0} : std::vector<double>{0.5, 1.0, 2.0, 4.0};
  std::vector<Labelled> targets;
  for (const auto& e : enumerate(N, std::min(m, 1))) targets.push_back({e.spec.describe(), e.spec});
  targets.push_back({"", PotentialSpec::real_sech(N)});
  if (N >= 2) {
    targets.push_back({"", PotentialSpec::pursey(N)});
    targets.push_back({"", PotentialSpec::abraham_moses(N)});
  }
  for (double l : {0.1, 5.0, -1.1}) targets.push_back({"", PotentialSpec::isospectral_family(N, l)});
  for (auto& t : targets) t.label = t.spec.describe();

  parallel_for(targets.size(), [&](std::size_t i) {
    const auto& t = targets[i];
    r.guarded("reflectionless " + t.label, [&] {
      const ScatteringGrid grid(t.spec);
      double worst_R = 0.0, worst_T = 0.0;
      for (double k : ks) {
        for (auto inc : {Incidence::left, Incidence::right}) {
          const auto a = grid.solve(k, inc);
          worst_R = std::max(worst_R, std::abs(a.R));
          worst_T = std::max(worst_T, std::abs(std::norm(a.T) - 1.0));
        }
      }
      r.strictly_below("numeric |R| " + t.label, worst_R, 1e-5);
      r.strictly_below("numeric ||T|^2-1| " + t.label, worst_T, 1e-5);
    });
  });

  const std::vector<double> control_ks = quick ? std::vector<double>{1.0} : std::vector<double>{0.5, 1.0, 2.0};
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1.3, 0.4}, {0.7, 1.2}}) {
    const std::string tag = pair_text(a, b);
    r.guarded("control " + tag, [&] {
      const auto spec = PotentialSpec::scarf2(a, b);
      const ScatteringGrid grid(spec);
      double dR = 0.0, dT = 0.0;
      for (double k : control_ks) {
        for (auto inc : {Incidence::left, Incidence::right}) {
          const auto num = grid.solve(k, inc);
          const auto ana = analytic_amplitudes(spec, k, inc);
          dR = std::max(dR, std::abs(num.R - ana.R));
          dT = std::max(dT, std::abs(num.T - ana.T));
        }
      }
      r.strictly_below("control |R_num - R_analytic| " + tag, dR, 1e-3);
      r.strictly_below("control |T_num - T_analytic| " + tag, dT, 1e-3);

      const Superpotential w(spec, Branch::normal);
      const ScatteringGrid partner_grid(PotentialSpec::partner_of(spec, Branch::normal));
      double dP = 0.0;
      for (double k : control_ks) {
        const auto base = grid.solve(k);
        const auto predicted = partner_RT(base, w, SusyRelation::partner);
        const auto direct = partner_grid.solve(k);
        dP = std::max({dP, std::abs(predicted.R - direct.R), std::abs(predicted.T - direct.T)});
      }
      r.strictly_below("partner relation on numeric amplitudes " + tag, dP, 1e-4);
    });
  }
}

void suite_specfun(Recorder& r) {
  using specfun::gamma;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(-6.0, 6.0), im(-4.0, 4.0), unit(0.05, 5.0);
  double rec = 0.0, refl = 0.0;
  for (int i = 0; i < 500; ++i) {
    const cplx z(re(rng), im(rng));
    rec = std::max(rec, std::abs(gamma(z + 1.0) - z * gamma(z)) / std::max(1.0, std::abs(z * gamma(z))));
    const cplx lhs = gamma(z) * gamma(1.0 - z) * std::sin(kPi * z);
    refl = std::max(refl, std::abs(lhs - kPi) / kPi);
  }
  r.below("Gamma(z+1) = z Gamma(z), relative", rec, 1e-10);
  r.below("Gamma(z) Gamma(1-z) sin(pi z) = pi, relative", refl, 1e-10);

  double three = 0.0;
  std::uniform_real_distribution<double> par(-0.9, 3.0), arg(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    const specfun::JacobiParams p{par(rng), par(rng)};
    const cplx z(arg(rng), arg(rng));
    for (int n = 1; n < 12; ++n) {
      const double a = p.alpha, b = p.beta, s = 2.0 * n + a + b;
      const double c1 = 2.0 * (n + 1) * (n + a + b + 1) * s;
      const cplx c2 = (s + 1) * ((s + 2) * s * z + a * a - b * b);
      const double c3 = 2.0 * (n + a) * (n + b) * (s + 2);
      const cplx lhs = c1 * specfun::jacobi(n + 1, p, z);
      const cplx rhs = c2 * specfun::jacobi(n, p, z) - c3 * specfun::jacobi(n - 1, p, z);
      three = std::max(three, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  }
  r.below("Jacobi three-term recurrence vs explicit sum, relative", three, 1e-10);

  double z0 = 0.0;
  std::uniform_real_distribution<double> ab(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) z0 = std::max(z0, std::abs(zeta(0, ab(rng), ab(rng), unit(rng)) - 1.0));
  r.below("zeta(m=0) = 1 over 1000 random (a,b,k)", z0, 1e-13);
}

}  // namespace

std::vector<std::string> verify_suites() { return {"n3", "count", "scattering", "specfun", "all"}; }

VerifyReport run_verify(const std::string& suite, int N, int m, bool quick) {
  if (N < 1 || m < 0) throw Error(ErrorKind::usage, "verify needs N >= 1 and m >= 0");
  VerifyReport report{suite, {}};
  Recorder r(report);
  const bool all = suite == "all";
  if (all || suite == "specfun") suite_specfun(r);
  if (all || suite == "count") suite_count(r, N, m);
  if (all || suite == "n3") suite_n3(r);
  if (all || suite == "scattering") suite_scattering(r, N, m, quick);
  if (report.checks.empty()) throw Error(ErrorKind::usage, "unknown suite " + suite);
  return report;
}

}  // namespace rflab::cli

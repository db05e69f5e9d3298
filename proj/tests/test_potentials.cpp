#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rflab/potentials.hpp"

using namespace rflab;

namespace {

const cplx I1(0.0, 1.0);

// exponential forms, written independently of the library's sech/tanh helpers
double sech_e(double x) { return 2.0 / (std::exp(x) + std::exp(-x)); }
double tanh_e(double x) { return (std::exp(2 * x) - 1.0) / (std::exp(2 * x) + 1.0); }

cplx scarf_oracle(double a, double b, double x) {
  const double s = sech_e(x);
  return -(b * b + a * (a + 1.0)) * s * s + I1 * b * (2.0 * a + 1.0) * s * tanh_e(x);
}

// m = 1 extension written out explicitly
cplx extended_m1_oracle(double a, double b, double x) {
  const cplx d = -2.0 * I1 * b * std::sinh(x) + 2.0 * a + 1.0;
  return scarf_oracle(a, b, x) - 2.0 * (2.0 * a + 1.0) / d + 2.0 * ((2.0 * a + 1.0) * (2.0 * a + 1.0) - 4.0 * b * b) / (d * d);
}

double family_n3_oracle(double x, double l) {
  const double s = sech_e(x), t = tanh_e(x), s2 = s * s;
  const double d = 8.0 + 16.0 * l + (8.0 + 4.0 * s2 + 3.0 * s2 * s2) * t;
  const double inner = (1.0 + 3.0 * std::cosh(2 * x) + std::cosh(4 * x)) * std::pow(s, 6) + 16.0 * t * (1.0 + 2.0 * l + t);
  return 6.0 * s2 * (-2.0 + 15.0 * s2 * s2 * inner / (d * d));
}

// sign = +1 Pursey, -1 AM; denominator (5 + 11 cosh 2x -+ 9 sinh 2x)^2
double pursey_am_n3_oracle(double x, double sign) {
  const double num = 25.0 * std::cosh(2 * x) + 13.0 * std::cosh(4 * x) -
                     sign * 3.0 * (-sign * 5.0 + 5.0 * std::sinh(2 * x) + 4.0 * std::sinh(4 * x));
  const double den = 5.0 + 11.0 * std::cosh(2 * x) - sign * 9.0 * std::sinh(2 * x);
  return -24.0 * sech_e(x) * sech_e(x) * num / (den * den);
}

std::vector<double> xs() {
  std::vector<double> v;
  for (int i = 0; i <= 160; ++i) v.push_back(-8.0 + 0.1 * i);
  return v;
}

}  // namespace

TEST_CASE("real well") {
  CHECK(eval_real_sech(3, 0.0) == -12.0);
  CHECK(eval_real_sech(1, 0.0) == -2.0);
  CHECK(std::abs(eval_real_sech(3, 40.0)) < 1e-30);
  CHECK(std::abs(eval_real_sech(3, -40.0)) < 1e-30);
  CHECK_THROWS_AS(PotentialSpec::real_sech(0), Error);
}

TEST_CASE("scarf2 values") {
  CHECK(eval_scarf2(2, 1, 0.0) == cplx(-7.0, 0.0));
  for (double x : xs()) {
    CHECK(eval_scarf2(1.7, 0.0, x).imag() == 0.0);
    CHECK(std::abs(eval_scarf2(1.7, 0.0, x).real() + 1.7 * 2.7 * sech_e(x) * sech_e(x)) < 1e-13);
    CHECK(std::abs(eval_scarf2(1.5, 1.5, x) - scarf_oracle(1.5, 1.5, x)) < 1e-13);
  }
}

TEST_CASE("conventional potential is invariant under the parametric swap") {
  CHECK(eval_scarf2_parametric(2, 1, 0.7) == eval_scarf2(2, 1, 0.7));
  CHECK(std::abs(eval_scarf2_parametric(0.5, 2.5, -0.3) - eval_scarf2(0.5, 2.5, -0.3)) < 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> p(-3.0, 4.0), xd(-6.0, 6.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = p(rng), b = p(rng), x = xd(rng);
    worst = std::max(worst, std::abs(eval_scarf2_parametric(a, b, x) - eval_scarf2(a, b, x)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("extended potential reduces to the m = 1 display and to m = 0") {
  for (double x : xs()) {
    CHECK(eval_scarf2_extended(1.3, 0.8, 0, x) == eval_scarf2(1.3, 0.8, x));
    for (auto [a, b] : std::vector<std::pair<double, double>>{{2, 1}, {1.5, 1.5}, {0.5, 2.5}, {0.3, 1.7}}) {
      CHECK(std::abs(eval_scarf2_extended(a, b, 1, x) - extended_m1_oracle(a, b, x)) < 1e-12);
      CHECK(std::abs(eval_scarf2_extended(a, b, 1, x, true) - extended_m1_oracle(b - 0.5, a + 0.5, x)) < 1e-12);
    }
  }
  CHECK(std::abs(eval_scarf2_extended(2, 1, 1, 0.0) - (-7.0 - 2.0 + 42.0 / 25.0)) < 1e-13);
}

TEST_CASE("extended potentials break the parametric symmetry") {
  double diff = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = -5.0 + 0.01 * i;
    diff = std::max(diff, std::abs(eval_scarf2_extended(2, 1, 1, x) - eval_scarf2_extended(2, 1, 1, x, true)));
  }
  CHECK(diff > 0.1);
}

TEST_CASE("extended potential where the series terminates early equals the lower extension") {
  // b = 1: P_2 drops to degree 1 and P_3 to degree 0.
  for (double x : {-20.0, -2.0, -0.4, 0.0, 0.9, 3.0, 24.0}) {
    CHECK(std::abs(eval_scarf2_extended(1.7, 1, 2, x) - eval_scarf2_extended(1.7, 1, 1, x)) < 1e-12);
    CHECK(std::abs(eval_scarf2_extended(1.7, 1, 3, x) - eval_scarf2(1.7, 1, x)) < 1e-12);
  }
}

TEST_CASE("extended potential singular point") {
  // m = 1 denominator 2a + 1 - 2ib sinh x vanishes at x = 0 when a = -1/2.
  try {
    eval_scarf2_extended(-0.5, 1.0, 1, 0.0);
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular);
  }
  try {
    sample(PotentialSpec::scarf2_extended(-0.5, 1.0, 1), -1.0, 0.25, 9);
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular);
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 4);
  }
}

TEST_CASE("isospectral family") {
  for (double x : xs()) {
    for (double l : {0.1, 5.0, -1.1, -5.0, 0.01}) {
      CHECK(std::abs(eval_isospectral_family(3, l, x) - family_n3_oracle(x, l)) < 1e-10);
    }
    CHECK(std::abs(eval_isospectral_family(3, 1e6, x) - eval_real_sech(3, x)) < 1e-4);
    CHECK(std::abs(eval_isospectral_family(3, -1e6, x) - eval_real_sech(3, x)) < 1e-4);
    CHECK(eval_isospectral_family(3, INFINITY, x) == eval_real_sech(3, x));
    CHECK(std::abs(eval_isospectral_family(3, 0.0, x) - pursey_am_n3_oracle(x, 1.0)) < 1e-10);
  }
  CHECK_THROWS_AS(PotentialSpec::isospectral_family(3, -0.5), Error);
  CHECK_THROWS_AS(PotentialSpec::isospectral_family(3, -1.0), Error);
  CHECK_THROWS_AS(PotentialSpec::isospectral_family(3, 0.0), Error);
  CHECK_THROWS_AS(eval_isospectral_family(3, -0.2, 0.0), Error);
}

TEST_CASE("pursey and abraham-moses") {
  for (double x : xs()) {
    CHECK(std::abs(eval_pursey_am(3, IsospectralLimit::pursey, x) - pursey_am_n3_oracle(x, 1.0)) < 1e-10);
    CHECK(std::abs(eval_pursey_am(3, IsospectralLimit::abraham_moses, x) - pursey_am_n3_oracle(x, -1.0)) < 1e-10);
    for (int N = 1; N <= 5; ++N) {
      CHECK(std::abs(eval_pursey_am(N, IsospectralLimit::abraham_moses, x) -
                     eval_pursey_am(N, IsospectralLimit::pursey, -x)) < 1e-10);
    }
  }
  for (double x : {-60.0, 60.0}) {
    CHECK(std::abs(eval_pursey_am(3, IsospectralLimit::pursey, x)) < 1e-20);
    CHECK(std::abs(eval_pursey_am(3, IsospectralLimit::abraham_moses, x)) < 1e-20);
  }
}

TEST_CASE("partner potentials") {
  const auto real3 = PotentialSpec::real_sech(3);
  for (double x : xs()) {
    CHECK(std::abs(partner_potential(real3, Branch::normal, x) + 6.0 * sech_e(x) * sech_e(x)) < 1e-12);
    const double a = 1.3, b = 0.4;
    const double s = sech_e(x), t = tanh_e(x);
    const cplx normal = -(b * b + a * (a - 1.0)) * s * s + I1 * b * (2.0 * a - 1.0) * s * t;
    const cplx param = -((b - 1.0) * (b - 1.0) + a * (a + 1.0)) * s * s + I1 * (b - 1.0) * (2.0 * a + 1.0) * s * t;
    const auto scarf = PotentialSpec::scarf2(a, b);
    CHECK(std::abs(partner_potential(scarf, Branch::normal, x) - normal) < 1e-12);
    CHECK(std::abs(partner_potential(scarf, Branch::parametric, x) - param) < 1e-12);
    CHECK(std::abs(partner_potential(scarf, Branch::normal, x) - eval_scarf2(a - 1.0, b, x)) < 1e-12);
    CHECK(std::abs(partner_potential(scarf, Branch::parametric, x) - eval_scarf2(a, b - 1.0, x)) < 1e-12);
    for (double l : {0.1, -1.1}) {
      CHECK(std::abs(partner_potential(PotentialSpec::isospectral_family(3, l), Branch::normal, x) +
                     6.0 * sech_e(x) * sech_e(x)) < 1e-8);
    }
    CHECK(std::abs(evaluate(PotentialSpec::partner_of(real3), x) + 6.0 * sech_e(x) * sech_e(x)) < 1e-12);
  }
  CHECK(std::abs(partner_potential(PotentialSpec::scarf2(2, 1), Branch::normal, 0.0) - cplx(-3.0, 0.0)) < 1e-14);
  CHECK_THROWS_AS(PotentialSpec::partner_of(PotentialSpec::scarf2_extended(2, 1, 1)), Error);
}

TEST_CASE("PT symmetry of every complex family") {
  const std::vector<PotentialSpec> specs{
      PotentialSpec::scarf2(1.3, 0.4),
      PotentialSpec::scarf2(0.5, 2.5, Branch::parametric),
      PotentialSpec::scarf2_extended(2, 1, 1),
      PotentialSpec::scarf2_extended(2, 1, 1, Branch::parametric),
      PotentialSpec::scarf2_extended(1.5, 1.5, 2),
      PotentialSpec::partner_of(PotentialSpec::scarf2(1.3, 0.4), Branch::parametric),
  };
  for (const auto& s : specs) {
    for (double x : xs()) CHECK(std::abs(evaluate(s, -x) - std::conj(evaluate(s, x))) < 1e-12);
  }
}

TEST_CASE("sampling") {
  const auto g = sample(PotentialSpec::real_sech(3), -10.0, 0.01, 2001);
  REQUIRE(g.size() == 2001);
  CHECK(g.x(1000) == doctest::Approx(0.0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.values[i].imag() == 0.0);
    CHECK(std::abs(g.values[i] - g.values[g.size() - 1 - i]) < 1e-12);
  }
  const auto s = sample(PotentialSpec::scarf2(1, 2), -5.0, 0.01, 1001);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(std::abs(s.values[i] - std::conj(s.values[s.size() - 1 - i])) < 1e-12);
  }
  const auto e = sample(PotentialSpec::scarf2_extended(2, 1, 1), -8.0, 0.01, 1601);
  for (const auto& v : e.values) CHECK(std::isfinite(std::abs(v)));
  CHECK_THROWS_AS(sample(PotentialSpec::real_sech(3), 0.0, 0.0, 10), Error);
  CHECK_THROWS_AS(sample(PotentialSpec::real_sech(3), 0.0, 0.1, 1), Error);
}

TEST_CASE("describe") {
  CHECK(PotentialSpec::scarf2(2, 1).describe() == "scarf2(a=2,b=1,normal)");
  CHECK(PotentialSpec::partner_of(PotentialSpec::real_sech(3)).describe() == "partner(realsech(N=3),normal)");
  CHECK(PotentialSpec::scarf2_extended(2, 1, 1, Branch::parametric).family() == Family::scarf2_extended);
}

#include <cmath>
#include <limits>

#include "rflab/cli.hpp"
#include "rflab/parallel.hpp"
#include "rflab/spectra.hpp"

namespace rflab::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Series {
  std::string label;
  RealToComplex f;
  Grid grid;
};

Series potential_series(const std::string& label, const PotentialSpec& spec, int points) {
  return {"V " + label, [spec](double x) { return evaluate(spec, x); }, {-5.0, 5.0, points}};
}

Series ground_series(const std::string& label, const PotentialSpec& spec, int points) {
  const BoundState s = eigenfunction(spec, 0);
  return {"psi0 " + label, s.wavefunction, {-10.0, 10.0, points}};
}

// lambda = +-inf is the undeformed well; 0 and -1 are the Pursey and AM limits.
PotentialSpec family_member(double lambda) {
  if (lambda == 0.0) return PotentialSpec::pursey(3);
  if (lambda == -1.0) return PotentialSpec::abraham_moses(3);
  return PotentialSpec::isospectral_family(3, lambda);
}

std::string lambda_label(double lambda) {
  if (std::isinf(lambda)) return lambda > 0 ? "lambda=inf" : "lambda=-inf";
  return "lambda=" + label_number(lambda);
}

std::string pair_label(double a, double b) { return "a=" + label_number(a) + ",b=" + label_number(b); }

std::vector<Series> figure_series(const std::string& id, int points) {
  std::vector<Series> out;
  const std::vector<std::pair<double, double>> half{{2.5, 0.5}, {1.5, 1.5}, {0.5, 2.5}};
  const std::vector<std::pair<double, double>> whole{{1.0, 2.0}, {2.0, 1.0}};

  if (id == "1a" || id == "1b") {
    const std::vector<double> lambdas =
        id == "1a" ? std::vector<double>{0.1, 0.01, 0.0001, 0.0, kInf} : std::vector<double>{-1.1, -1.01, -1.0001, -1.0, -kInf};
    for (double l : lambdas) out.push_back(potential_series(lambda_label(l), family_member(l), points));
  } else if (id == "1c") {
    out.push_back(potential_series("pursey", PotentialSpec::pursey(3), points));
    out.push_back(potential_series("am", PotentialSpec::abraham_moses(3), points));
    out.push_back(potential_series("partner", PotentialSpec::partner_of(PotentialSpec::real_sech(3)), points));
  } else if (id == "1d") {
    for (double l : {0.1, 0.01, 0.001, kInf}) out.push_back(ground_series(lambda_label(l), family_member(l), points));
  } else if (id == "2") {
    for (auto [a, b] : half) out.push_back(potential_series(pair_label(a, b), PotentialSpec::scarf2(a, b), points));
  } else if (id == "3") {
    for (auto [a, b] : half) out.push_back(ground_series(pair_label(a, b), PotentialSpec::scarf2(a, b), points));
    for (auto [a, b] : whole) out.push_back(ground_series(pair_label(a, b), PotentialSpec::scarf2(a, b), points));
  } else if (id == "4") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{1.5, 1.5}, {0.5, 2.5}, {1.0, 2.0}, {2.0, 1.0}, {0.0, 3.0}}) {
      out.push_back(ground_series(pair_label(a, b) + ",parametric",
                                  PotentialSpec::scarf2(a, b, Branch::parametric), points));
    }
  } else if (id == "5") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.5, 2.5}, {2.0, 1.0}}) {
      out.push_back(ground_series(pair_label(a, b) + ",normal", PotentialSpec::scarf2(a, b), points));
      out.push_back(ground_series(pair_label(a, b) + ",parametric",
                                  PotentialSpec::scarf2(a, b, Branch::parametric), points));
    }
  } else if (id == "6" || id == "7") {
    const Branch br = id == "6" ? Branch::normal : Branch::parametric;
    const std::vector<std::pair<double, double>> pairs =
        id == "6" ? std::vector<std::pair<double, double>>{{0.5, 2.5}, {1.5, 1.5}, {2.5, 0.5}, {2.0, 1.0}, {1.0, 2.0}}
                  : std::vector<std::pair<double, double>>{{1.5, 1.5}, {0.5, 2.5}, {2.0, 1.0}, {1.0, 2.0}, {0.0, 3.0}};
    for (auto [a, b] : pairs) {
      const auto spec = PotentialSpec::scarf2_extended(a, b, 1, br);
      const std::string label = pair_label(a, b) + ",m=1," + to_string(br);
      out.push_back(potential_series(label, spec, points));
      out.push_back(ground_series(label, spec, points));
    }
  } else if (id == "8") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.5, 2.5}, {2.0, 1.0}}) {
      for (Branch br : {Branch::normal, Branch::parametric}) {
        const auto spec = PotentialSpec::scarf2_extended(a, b, 1, br);
        const std::string label = pair_label(a, b) + ",m=1," + to_string(br);
        out.push_back(potential_series(label, spec, points));
        out.push_back(ground_series(label, spec, points));
      }
    }
  } else {
    throw Error(ErrorKind::usage, "unknown figure id " + id);
  }
  return out;
}

}  // namespace

std::vector<std::string> figure_ids() { return {"1a", "1b", "1c", "1d", "2", "3", "4", "5", "6", "7", "8"}; }

Table figure_table(const std::string& id, int points) {
  if (points < 2) throw Error(ErrorKind::usage, "figure needs at least 2 points");
  const auto series = figure_series(id, points);
  Table t{{"series", "x", "re", "im", "abs"}, {}, {{"command", "figure"}, {"figure", id}}};
  t.meta["series"] = nlohmann::ordered_json::array();
  for (const auto& s : series) t.meta["series"].push_back(s.label);
  t.rows.resize(series.size() * static_cast<std::size_t>(points));
  parallel_for(t.rows.size(), [&](std::size_t r) {
    const auto& s = series[r / static_cast<std::size_t>(points)];
    const int i = static_cast<int>(r % static_cast<std::size_t>(points));
    const double x = s.grid.x(i);
    const cplx v = s.f(x);
    t.rows[r] = {s.label, x, v.real(), v.imag(), std::abs(v)};
  });
  return t;
}

}  // namespace rflab::cli

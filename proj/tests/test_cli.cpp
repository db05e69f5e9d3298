#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <sstream>

#include "rflab/cli.hpp"
#include "rflab/spectra.hpp"

using namespace rflab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "reflectionless_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  f.push_back(cur);
  return f;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    FAIL("missing column " << name);
    return 0;
  }
  double num(std::size_t r, const std::string& name) const { return std::strtod(rows[r][col(name)].c_str(), nullptr); }
};

Csv parse_csv(const std::string& text) {
  Csv c;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  c.header = split_csv_line(line);
  while (std::getline(in, line))
    if (!line.empty()) c.rows.push_back(split_csv_line(line));
  return c;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

// every numeric cell of `t` reads back bit-exactly from both serializations
void check_round_trip(const cli::Table& t) {
  const Csv csv = parse_csv(cli::to_csv(t));
  const json js = json::parse(cli::to_json(t).dump());
  REQUIRE(csv.rows.size() == t.rows.size());
  REQUIRE(js["rows"].size() == t.rows.size());
  CHECK(js["schema_version"] == 1);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const auto& cell = t.rows[r][c];
      const auto& jv = js["rows"][r][t.columns[c]];
      if (const double* d = std::get_if<double>(&cell)) {
        CHECK(same_bits(std::strtod(csv.rows[r][c].c_str(), nullptr), *d));
        CHECK(same_bits(jv.get<double>(), *d));
      } else if (const long long* i = std::get_if<long long>(&cell)) {
        CHECK(std::stoll(csv.rows[r][c]) == *i);
        CHECK(jv.get<long long>() == *i);
      } else {
        CHECK(csv.rows[r][c] == std::get<std::string>(cell));
        CHECK(jv.get<std::string>() == std::get<std::string>(cell));
      }
    }
}

double sech_e(double x) { return 2.0 / (std::exp(x) + std::exp(-x)); }

}  // namespace

TEST_CASE("potential command") {
  const auto r = run_cli({"potential", "--family", "scarf2", "--a", "2", "--b", "1", "--x-min", "-5", "--x-max", "5",
                          "--points", "1001"});
  REQUIRE(r.code == cli::kOk);
  const Csv c = parse_csv(r.out);
  CHECK(c.header == std::vector<std::string>{"x", "re_V", "im_V"});
  REQUIRE(c.rows.size() == 1001);
  CHECK(c.num(500, "x") == 0.0);
  CHECK(c.num(500, "im_V") == 0.0);
  CHECK(c.num(500, "re_V") == -7.0);

  const Csv w = parse_csv(run_cli({"potential", "--family", "realsech", "--N", "3"}).out);
  double lo = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < w.rows.size(); ++i)
    if (w.num(i, "re_V") < lo) lo = w.num(i, "re_V"), at = i;
  CHECK(lo == -12.0);
  CHECK(w.num(at, "x") == 0.0);

  // isospectral family data follows the N = 3 closed form
  const Csv f = parse_csv(run_cli({"potential", "--family", "isofamily", "--N", "3", "--lambda", "0.1"}).out);
  for (std::size_t i = 0; i < f.rows.size(); i += 50) {
    const double x = f.num(i, "x");
    CHECK(std::abs(f.num(i, "re_V") - eval_isospectral_family(3, 0.1, x)) == 0.0);
  }
}

TEST_CASE("wavefunction, spectrum and scatter commands") {
  const Csv w = parse_csv(run_cli({"wavefunction", "--family", "realsech", "--N", "3", "--n", "0"}).out);
  CHECK(w.header == std::vector<std::string>{"x", "re_psi", "im_psi", "abs_psi"});
  double peak = 0.0;
  for (std::size_t i = 0; i < w.rows.size(); ++i) peak = std::max(peak, w.num(i, "abs_psi"));
  CHECK(std::abs(peak - std::sqrt(15.0) / 4.0) < 1e-15);

  const Csv s = parse_csv(run_cli({"spectrum", "--family", "realsech", "--N", "3"}).out);
  REQUIRE(s.rows.size() == 3);
  CHECK(s.num(0, "energy") == -9.0);
  CHECK(s.num(2, "energy") == -1.0);

  const auto sc = run_cli({"scatter", "--family", "realsech", "--N", "3", "--k-min", "0.5", "--k-max", "4",
                           "--k-points", "8", "--source", "numeric"});
  REQUIRE(sc.code == cli::kOk);
  const Csv c = parse_csv(sc.out);
  REQUIRE(c.rows.size() == 8);
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    CHECK(c.num(i, "abs_R") < 1e-5);
    CHECK(c.rows[i][c.col("source")] == "numeric");
  }
  const Csv ctl = parse_csv(
      run_cli({"scatter", "--family", "scarf2", "--a", "1.3", "--b", "0.4", "--k", "1", "--source", "both"}).out);
  REQUIRE(ctl.rows.size() == 2);
  CHECK(ctl.num(0, "abs_R") > 0.05);
  CHECK(std::abs(ctl.num(0, "abs_R") - ctl.num(1, "abs_R")) < 1e-6);
  const Csv fr = parse_csv(run_cli({"scatter", "--family", "free", "--k", "1,2", "--source", "both"}).out);
  REQUIRE(fr.rows.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(fr.num(i, "abs_R") == 0.0);
    CHECK(fr.num(i, "re_T") == 1.0);
  }
}

TEST_CASE("exit codes and error reports") {
  auto bad = run_cli({"potential", "--family", "isofamily", "--N", "3", "--lambda", "-0.5"});
  CHECK(bad.code == cli::kUsageError);
  const json e = json::parse(bad.err);
  CHECK(e["error"]["kind"] == "domain");
  CHECK(run_cli({}).code == cli::kUsageError);
  CHECK(run_cli({"nonsense"}).code == cli::kUsageError);
  CHECK(run_cli({"potential", "--family", "nosuch"}).code == cli::kUsageError);
  CHECK(run_cli({"potential", "--family", "scarf2", "--a", "1", "--b", "1", "--points", "1"}).code ==
        cli::kUsageError);
  CHECK(run_cli({"wavefunction", "--family", "realsech", "--N", "3", "--n", "3"}).code == cli::kUsageError);
  CHECK(json::parse(run_cli({"wavefunction", "--family", "realsech", "--N", "3", "--n", "3"}).err)["error"]["kind"] ==
        "index");
  CHECK(run_cli({"verify", "--suite", "nosuch"}).code == cli::kUsageError);
}

TEST_CASE("verify command") {
  const auto n3 = run_cli({"verify", "--suite", "n3"});
  CHECK(n3.code == cli::kOk);
  const json rep = json::parse(n3.out);
  CHECK(rep["schema_version"] == 1);
  CHECK(rep["suite"] == "n3");
  CHECK(rep["checks"].size() > 10);
  for (const auto& c : rep["checks"]) CHECK(c["pass"] == true);

  const auto cnt = run_cli({"verify", "--suite", "count", "--N", "4", "--m", "2"});
  CHECK(cnt.code == cli::kOk);
  bool saw36 = false;
  const json cj = json::parse(cnt.out);
  for (const auto& c : cj["checks"]) saw36 |= (c["value"] == 36.0);
  CHECK(saw36);

  // a failing check reports exit 1
  cli::VerifyReport fail{"x", {{"always", 1.0, 0.0, false}}};
  CHECK_FALSE(fail.all_pass());
}

TEST_CASE("catalog command") {
  for (auto [N, m, rows] : {std::tuple{3, 0, 6}, {3, 1, 16}, {1, 0, 2}}) {
    const auto r = run_cli({"catalog", "--N", std::to_string(N), "--m", std::to_string(m)});
    REQUIRE(r.code == cli::kOk);
    const json j = json::parse(r.out);
    CHECK(j["count"] == rows);
    CHECK(j["expected_count"] == rows);
    CHECK(j["entries"].size() == static_cast<std::size_t>(rows));
  }
  const Csv c = parse_csv(run_cli({"catalog", "--N", "3", "--m", "1", "--format", "csv"}).out);
  CHECK(c.rows.size() == 16);
}

TEST_CASE("round trip of emitted tables") {
  const cli::Grid g{-5.0, 5.0, 257};
  check_round_trip(cli::potential_table(PotentialSpec::scarf2(1.3, 0.4), g));
  check_round_trip(cli::potential_table(PotentialSpec::isospectral_family(3, 0.1), g));
  check_round_trip(cli::wavefunction_table(PotentialSpec::scarf2_extended(2, 1, 1), 0, {-10.0, 10.0, 201}));
  check_round_trip(cli::spectrum_table(PotentialSpec::scarf2(2.5, 0.5)));
  cli::ScatterRequest req;
  req.ks = {0.5, 1.0};
  req.incidences = {Incidence::left, Incidence::right};
  check_round_trip(cli::scatter_table(PotentialSpec::scarf2(0.7, 1.2), req));
  check_round_trip(cli::catalog_table(3, 1));
  for (const auto& id : cli::figure_ids()) check_round_trip(cli::figure_table(id, 101));

  // awkward values survive too
  cli::Table t{{"v"}, {}};
  for (double v : {0.1, 1.0 / 3.0, -1e-300, 5e-324, 1.7976931348623157e308, -0.0, 123456789.123456789})
    t.rows.push_back({v});
  check_round_trip(t);
}

TEST_CASE("figure extrema") {
  auto series = [](const std::string& id, const std::string& name) {
    const Csv c = parse_csv(run_cli({"figure", "--id", id}).out);
    std::vector<std::array<double, 4>> pts;
    for (std::size_t i = 0; i < c.rows.size(); ++i)
      if (c.rows[i][c.col("series")] == name)
        pts.push_back({c.num(i, "x"), c.num(i, "re"), c.num(i, "im"), c.num(i, "abs")});
    REQUIRE(!pts.empty());
    return pts;
  };
  double lo = 0.0;
  for (const auto& p : series("1a", "V lambda=inf")) lo = std::min(lo, p[1]);
  CHECK(lo == -12.0);
  for (const auto& p : series("1c", "V partner")) lo = std::min(lo, p[1]);
  CHECK(lo == -12.0);

  double peak = 0.0;
  for (const auto& p : series("1d", "psi0 lambda=inf")) peak = std::max(peak, p[3]);
  CHECK(std::abs(peak - std::sqrt(15.0) / 4.0) < 1e-15);

  // deformed ground state against its closed form
  for (const auto& p : series("1d", "psi0 lambda=0.1")) {
    const double x = p[0], s2 = sech_e(x) * sech_e(x);
    const double ref = 4.0 * std::sqrt(15.0 * 0.1 * 1.1) * s2 * sech_e(x) /
                       (8.0 + 1.6 + (8.0 + 4.0 * s2 + 3.0 * s2 * s2) * std::tanh(x));
    CHECK(std::abs(p[3] - ref) < 1e-12);
  }

  // conventional potentials: V(0) = -(b^2 + a(a+1))
  for (auto [name, v0] : {std::pair{"V a=2.5,b=0.5", -9.0}, {"V a=1.5,b=1.5", -6.0}, {"V a=0.5,b=2.5", -7.0}})
    for (const auto& p : series("2", name))
      if (p[0] == 0.0) CHECK(p[1] == doctest::Approx(v0).epsilon(1e-15));

  // ground states are the residual-verified eigenfunctions
  for (auto [name, spec] : {std::pair{"psi0 a=2.5,b=0.5", PotentialSpec::scarf2(2.5, 0.5)},
                            {"psi0 a=2,b=1", PotentialSpec::scarf2(2, 1)}}) {
    const auto st = eigenfunction(spec, 0);
    for (const auto& p : series("3", name)) CHECK(std::abs(p[3] - std::abs(st(p[0]))) < 1e-14);
    const auto V = [s = spec](double x) { return evaluate(s, x); };
    CHECK(schrodinger_residual(V, st.energy, st.wavefunction, -12, 12) < 1e-6);
  }
  const auto par = eigenfunction(PotentialSpec::scarf2(1.5, 1.5, Branch::parametric), 0);
  for (const auto& p : series("4", "psi0 a=1.5,b=1.5,parametric")) CHECK(std::abs(p[3] - std::abs(par(p[0]))) < 1e-14);
}

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rflab/potentials.hpp"
#include "rflab/scattering.hpp"

namespace rflab::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// %.17g, which reads back to the identical double.
std::string format_double(double v);

/// Short form for labels (%.10g).
std::string label_number(double v);

/// RFC 4180 style: header row, fields quoted only when they contain , " or a newline.
std::string to_csv(const Table& t);
/// {"schema_version": 1, <meta>, "columns": [...], "rows": [{column: value}, ...]}
nlohmann::ordered_json to_json(const Table& t);

struct Grid {
  double x_min = -5.0;
  double x_max = 5.0;
  int points = 1001;

  double x(int i) const;
};

/// A potential from the command line; nullopt means V = 0.
using Target = std::optional<PotentialSpec>;

std::string describe(const Target& t);

Table potential_table(const Target& target, const Grid& grid);
Table wavefunction_table(const PotentialSpec& spec, int n, const Grid& grid);
Table spectrum_table(const PotentialSpec& spec);

struct ScatterRequest {
  std::vector<double> ks;
  bool analytic = true;
  bool numeric = true;
  std::vector<Incidence> incidences{Incidence::left};
  NumericScatterOptions options;
};

Table scatter_table(const Target& target, const ScatterRequest& request);

Table catalog_table(int N, int m);
nlohmann::ordered_json catalog_json(int N, int m);

/// Figure data in long form (series, x, re, im, abs). Ids: 1a 1b 1c 1d 2 .. 8.
Table figure_table(const std::string& id, int points = 1001);
std::vector<std::string> figure_ids();

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

/// Suites: n3, count, scattering, specfun, all.
VerifyReport run_verify(const std::string& suite, int N, int m, bool quick);
std::vector<std::string> verify_suites();

/// Full command line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rflab::cli

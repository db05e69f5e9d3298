#include "rflab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "rflab/catalog.hpp"
#include "rflab/parallel.hpp"
#include "rflab/spectra.hpp"

namespace rflab::cli {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string label_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

std::string csv_field(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

nlohmann::ordered_json json_value(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t j = 0; j < t.columns.size(); ++j) out += (j ? "," : "") + csv_field(t.columns[j]);
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + csv_field(row[j]);
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j = {{"schema_version", 1}};
  for (const auto& [key, value] : t.meta.items()) j[key] = value;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) r[t.columns[c]] = json_value(row[c]);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

double Grid::x(int i) const {
  if (i == points - 1) return x_max;
  return x_min + (x_max - x_min) * static_cast<double>(i) / (points - 1);
}

namespace {

void check_grid(const Grid& g) {
  if (g.points < 2) throw Error(ErrorKind::usage, "grid needs at least 2 points");
  if (!(g.x_max > g.x_min)) throw Error(ErrorKind::usage, "grid needs x-max > x-min");
}

}  // namespace

std::string describe(const Target& t) { return t ? t->describe() : "free"; }

Table potential_table(const Target& target, const Grid& grid) {
  check_grid(grid);
  Table t{{"x", "re_V", "im_V"}, {}, {{"command", "potential"}, {"potential", describe(target)}}};
  t.rows.resize(static_cast<std::size_t>(grid.points));
  parallel_for(t.rows.size(), [&](std::size_t i) {
    const double x = grid.x(static_cast<int>(i));
    cplx v = 0.0;
    if (target) {
      try {
        v = evaluate(*target, x);
      } catch (const Error& e) {
        throw Error(e.kind(), std::string(e.what()) + " (grid index " + std::to_string(i) + ")", i);
      }
    }
    t.rows[i] = {x, v.real(), v.imag()};
  });
  return t;
}

Table wavefunction_table(const PotentialSpec& spec, int n, const Grid& grid) {
  check_grid(grid);
  const BoundState s = eigenfunction(spec, n);
  Table t{{"x", "re_psi", "im_psi", "abs_psi"},
          {},
          {{"command", "wavefunction"}, {"potential", spec.describe()}, {"n", n}, {"energy", s.energy}}};
  t.rows.resize(static_cast<std::size_t>(grid.points));
  parallel_for(t.rows.size(), [&](std::size_t i) {
    const double x = grid.x(static_cast<int>(i));
    const cplx psi = s(x);
    t.rows[i] = {x, psi.real(), psi.imag(), std::abs(psi)};
  });
  return t;
}

Table spectrum_table(const PotentialSpec& spec) {
  Table t{{"n", "energy"}, {}, {{"command", "spectrum"}, {"potential", spec.describe()}}};
  const auto levels = bound_energies(spec);
  for (std::size_t n = 0; n < levels.size(); ++n) t.rows.push_back({static_cast<long long>(n), levels[n]});
  return t;
}

Table scatter_table(const Target& target, const ScatterRequest& request) {
  for (double k : request.ks) {
    if (!(k > 0.0)) throw Error(ErrorKind::domain, "scatter: every k must be positive");
  }
  Table t{{"k", "re_R", "im_R", "abs_R", "re_T", "im_T", "abs_T2", "source", "incidence"},
          {},
          {{"command", "scatter"}, {"potential", describe(target)}}};
  std::optional<ScatteringGrid> grid;
  if (request.numeric) {
    grid.emplace(target ? RealToComplex([&s = *target](double x) { return evaluate(s, x); })
                        : RealToComplex([](double) { return cplx(0.0); }),
                 request.options);
    t.meta["L"] = request.options.L;
    t.meta["dx"] = request.options.dx;
  }
  struct Job {
    double k;
    Incidence inc;
    bool numeric;
  };
  std::vector<Job> jobs;
  for (double k : request.ks) {
    for (auto inc : request.incidences) {
      if (request.analytic) jobs.push_back({k, inc, false});
      if (request.numeric) jobs.push_back({k, inc, true});
    }
  }
  std::vector<ScatteringAmplitudes> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& j = jobs[i];
    if (j.numeric) {
      results[i] = grid->solve(j.k, j.inc);
    } else if (target) {
      results[i] = analytic_amplitudes(*target, j.k, j.inc);
    } else {
      results[i] = {j.k, 0.0, 1.0, AmplitudeSource::analytic, j.inc, 0.0};
    }
  });
  for (const auto& r : results) {
    t.rows.push_back({r.k, r.R.real(), r.R.imag(), std::abs(r.R), r.T.real(), r.T.imag(), std::norm(r.T),
                      std::string(to_string(r.source)), std::string(to_string(r.incidence))});
  }
  return t;
}

Table catalog_table(int N, int m) {
  const auto entries = enumerate(N, m);
  Table t{{"index", "potential", "case", "a", "b", "m", "n_bound", "normal_valid", "parametric_valid", "from_normal",
           "from_parametric"},
          {},
          {{"command", "catalog"}, {"N", N}, {"m", m}, {"count", entries.size()},
           {"expected_count", expected_count(N, m)}}};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    t.rows.push_back({static_cast<long long>(i), e.spec.describe(), std::string(to_string(e.case_label)), e.a, e.b,
                      static_cast<long long>(e.m), static_cast<long long>(e.n_bound),
                      static_cast<long long>(e.branch_validity.normal),
                      static_cast<long long>(e.branch_validity.parametric),
                      static_cast<long long>(e.spectrum_split.from_normal),
                      static_cast<long long>(e.spectrum_split.from_parametric)});
  }
  return t;
}

nlohmann::ordered_json catalog_json(int N, int m) {
  const auto entries = enumerate(N, m);
  nlohmann::ordered_json j = {{"schema_version", 1},
                      {"command", "catalog"},
                      {"N", N},
                      {"m", m},
                      {"count", entries.size()},
                      {"expected_count", expected_count(N, m)}};
  auto list = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const auto* ext = e.spec.get_if<ScarfIIExtended>();
    const auto* conv = e.spec.get_if<ScarfII>();
    const bool parametric = ext ? ext->parametric : conv->parametric;
    list.push_back({{"index", i},
                    {"potential", e.spec.describe()},
                    {"family", to_string(e.spec.family())},
                    {"case_label", to_string(e.case_label)},
                    {"a", e.a},
                    {"b", e.b},
                    {"m", e.m},
                    {"branch", parametric ? "parametric" : "normal"},
                    {"n_bound", e.n_bound},
                    {"branch_validity", {{"normal", e.branch_validity.normal}, {"parametric", e.branch_validity.parametric}}},
                    {"spectrum_split",
                     {{"from_normal", e.spectrum_split.from_normal},
                      {"from_parametric", e.spectrum_split.from_parametric}}}});
  }
  j["entries"] = std::move(list);
  j["distinct_potentials"] = distinct_potentials(entries);
  return j;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  auto list = nlohmann::ordered_json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    failed += c.pass ? 0 : 1;
  }
  return {{"schema_version", 1}, {"command", "verify"},           {"suite", suite},
          {"checks", list},      {"passed", checks.size() - failed}, {"failed", failed},
          {"all_pass", failed == 0}};
}

// ---------------------------------------------------------------------------

namespace {

struct SpecFlags {
  std::string family = "realsech";
  int N = 3;
  double a = 2.0;
  double b = 1.0;
  int m = 1;
  double lambda = 0.1;
  std::string branch = "normal";
  bool partner = false;
  std::string partner_branch = "normal";
};

Branch parse_branch(const std::string& s) { return s == "parametric" ? Branch::parametric : Branch::normal; }

Target make_target(const SpecFlags& f) {
  Target t;
  const Branch br = parse_branch(f.branch);
  if (f.family == "free") {
    if (f.partner) throw Error(ErrorKind::usage, "--partner needs a non-free family");
    return t;
  }
  if (f.family == "realsech") {
    t = PotentialSpec::real_sech(f.N);
  } else if (f.family == "scarf2") {
    t = PotentialSpec::scarf2(f.a, f.b, br);
  } else if (f.family == "scarf2ext") {
    t = PotentialSpec::scarf2_extended(f.a, f.b, f.m, br);
  } else if (f.family == "isofamily") {
    t = PotentialSpec::isospectral_family(f.N, f.lambda);
  } else if (f.family == "pursey") {
    t = PotentialSpec::pursey(f.N);
  } else {
    t = PotentialSpec::abraham_moses(f.N);
  }
  if (f.partner) t = PotentialSpec::partner_of(*t, parse_branch(f.partner_branch));
  return t;
}

void add_spec_flags(CLI::App* app, SpecFlags& f) {
  app->add_option("--family", f.family, "Potential family")
      ->check(CLI::IsMember({"realsech", "scarf2", "scarf2ext", "isofamily", "pursey", "am", "free"}))
      ->capture_default_str();
  app->add_option("--N", f.N, "Number of bound states of the real well")->capture_default_str();
  app->add_option("--a", f.a, "Scarf-II parameter a")->capture_default_str();
  app->add_option("--b", f.b, "Scarf-II parameter b")->capture_default_str();
  app->add_option("--m", f.m, "Rational extension index")->capture_default_str();
  app->add_option("--lambda", f.lambda, "Isospectral deformation parameter (inf allowed)")->capture_default_str();
  app->add_option("--branch", f.branch, "Scarf-II branch")
      ->check(CLI::IsMember({"normal", "parametric"}))
      ->capture_default_str();
  app->add_flag("--partner", f.partner, "Use the SUSY partner W^2 + W' of the selected potential");
  app->add_option("--partner-branch", f.partner_branch, "Superpotential used for --partner")
      ->check(CLI::IsMember({"normal", "parametric"}))
      ->capture_default_str();
}

void add_grid_flags(CLI::App* app, Grid& g) {
  app->add_option("--x-min", g.x_min)->capture_default_str();
  app->add_option("--x-max", g.x_max)->capture_default_str();
  app->add_option("--points", g.points)->capture_default_str();
}

struct OutputFlags {
  std::string format = "csv";
  std::string path;
};

void add_output_flags(CLI::App* app, OutputFlags& o, const std::string& default_format) {
  o.format = default_format;
  app->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app->add_option("--output,-o", o.path, "Output file (default: stdout)");
}

void emit(const std::string& text, const OutputFlags& o, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw Error(ErrorKind::usage, "cannot open output file " + o.path);
  f << text;
  if (!f) throw Error(ErrorKind::usage, "failed writing " + o.path);
}

void emit_table(const Table& t, const OutputFlags& o, std::ostream& out) {
  emit(o.format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t), o, out);
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> index = std::nullopt) {
  nlohmann::ordered_json j = {{"error", {{"kind", kind}, {"message", message}}}};
  if (index) j["error"]["index"] = *index;
  err << j.dump() << "\n";
}

std::vector<double> k_grid(const std::vector<double>& list, double k_min, double k_max, int k_points) {
  if (!list.empty()) return list;
  if (k_points < 1 || !(k_min > 0.0) || k_max < k_min) throw Error(ErrorKind::usage, "bad k grid");
  std::vector<double> ks;
  for (int i = 0; i < k_points; ++i) {
    ks.push_back(k_points == 1 ? k_min : k_min + (k_max - k_min) * i / (k_points - 1));
  }
  return ks;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly solvable reflectionless potentials: evaluation, spectra, scattering and verification"};
  app.require_subcommand(1);

  SpecFlags spec_flags;
  Grid grid;
  OutputFlags pot_out, wf_out, spec_out, scat_out, verify_out, cat_out, fig_out;
  int n = 0;

  auto* potential = app.add_subcommand("potential", "Sample V(x) on a grid (columns x, re_V, im_V)");
  add_spec_flags(potential, spec_flags);
  add_grid_flags(potential, grid);
  add_output_flags(potential, pot_out, "csv");

  Grid wf_grid{-10.0, 10.0, 1001};
  auto* wavefunction = app.add_subcommand("wavefunction", "Sample a normalized eigenfunction");
  add_spec_flags(wavefunction, spec_flags);
  add_grid_flags(wavefunction, wf_grid);
  wavefunction->add_option("--n", n, "State index")->capture_default_str();
  add_output_flags(wavefunction, wf_out, "csv");

  auto* spectrum = app.add_subcommand("spectrum", "List closed-form bound-state energies");
  add_spec_flags(spectrum, spec_flags);
  add_output_flags(spectrum, spec_out, "csv");

  std::vector<double> ks;
  double k_min = 0.2, k_max = 5.0;
  int k_points = 50;
  std::string source = "both";
  std::string incidence = "left";
  NumericScatterOptions scatter_options;
  auto* scatter = app.add_subcommand("scatter", "Reflection and transmission amplitudes over a k grid");
  add_spec_flags(scatter, spec_flags);
  scatter->add_option("--k", ks, "Explicit wave numbers (comma separated)")->delimiter(',');
  scatter->add_option("--k-min", k_min)->capture_default_str();
  scatter->add_option("--k-max", k_max)->capture_default_str();
  scatter->add_option("--k-points", k_points)->capture_default_str();
  scatter->add_option("--source", source)->check(CLI::IsMember({"analytic", "numeric", "both"}))->capture_default_str();
  scatter->add_option("--incidence", incidence)->check(CLI::IsMember({"left", "right", "both"}))->capture_default_str();
  scatter->add_option("--L", scatter_options.L, "Half-width of the integration domain")->capture_default_str();
  scatter->add_option("--dx", scatter_options.dx, "Integration step")->capture_default_str();
  scatter->add_option("--tolerance", scatter_options.tolerance)->capture_default_str();
  add_output_flags(scatter, scat_out, "csv");

  std::string suite = "n3";
  int verify_N = 3, verify_m = 1;
  bool quick = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 if any check fails");
  verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suites()))->capture_default_str();
  verify->add_option("--N", verify_N)->capture_default_str();
  verify->add_option("--m", verify_m)->capture_default_str();
  verify->add_flag("--quick", quick, "Reduced k grid");
  verify->add_option("--output,-o", verify_out.path, "Report file (default: stdout)");

  int cat_N = 3, cat_m = 0;
  auto* catalog = app.add_subcommand("catalog", "Enumerate the reflectionless Scarf-II catalog");
  catalog->add_option("--N", cat_N)->capture_default_str();
  catalog->add_option("--m", cat_m)->capture_default_str();
  add_output_flags(catalog, cat_out, "json");

  std::string figure_id;
  int figure_points = 1001;
  auto* figure = app.add_subcommand("figure", "Emit the data behind one of the N = 3 illustrations");
  figure->add_option("--id", figure_id)->required()->check(CLI::IsMember(figure_ids()));
  figure->add_option("--points", figure_points)->capture_default_str();
  add_output_flags(figure, fig_out, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kUsageError;
  }

  try {
    if (potential->parsed()) {
      emit_table(potential_table(make_target(spec_flags), grid), pot_out, out);
    } else if (wavefunction->parsed()) {
      const Target t = make_target(spec_flags);
      if (!t) throw Error(ErrorKind::usage, "the free particle has no bound states");
      emit_table(wavefunction_table(*t, n, wf_grid), wf_out, out);
    } else if (spectrum->parsed()) {
      const Target t = make_target(spec_flags);
      if (!t) throw Error(ErrorKind::usage, "the free particle has no bound states");
      emit_table(spectrum_table(*t), spec_out, out);
    } else if (scatter->parsed()) {
      ScatterRequest req;
      req.ks = k_grid(ks, k_min, k_max, k_points);
      req.analytic = source != "numeric";
      req.numeric = source != "analytic";
      if (incidence == "both") {
        req.incidences = {Incidence::left, Incidence::right};
      } else {
        req.incidences = {incidence == "left" ? Incidence::left : Incidence::right};
      }
      req.options = scatter_options;
      emit_table(scatter_table(make_target(spec_flags), req), scat_out, out);
    } else if (verify->parsed()) {
      const VerifyReport report = run_verify(suite, verify_N, verify_m, quick);
      emit(report.to_json().dump(2) + "\n", verify_out, out);
      return report.all_pass() ? kOk : kVerificationFailed;
    } else if (catalog->parsed()) {
      if (cat_out.format == "json") {
        emit(catalog_json(cat_N, cat_m).dump(2) + "\n", cat_out, out);
      } else {
        emit(to_csv(catalog_table(cat_N, cat_m)), cat_out, out);
      }
    } else if (figure->parsed()) {
      emit_table(figure_table(figure_id, figure_points), fig_out, out);
    }
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what(), e.index());
    return kUsageError;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kUsageError;
  }
  return kOk;
}

}  // namespace rflab::cli

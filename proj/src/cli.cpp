#include "bk/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bk/acceptance.hpp"
#include "bk/cloud_spec.hpp"
#include "bk/complexes.hpp"
#include "bk/homology.hpp"
#include "bk/scenarios.hpp"

namespace bk {

using nlohmann::json;

namespace {

struct RunOptions {
  std::string scenario;
  std::string file;
  std::vector<double> t;
  std::string t_grid;
  std::string complex;
  int max_dim = -1;
  std::string emit = "json";
  bool audit = false;
  std::string out;
  ScenarioOptions scenario_opts;
};

void print_diagnostics(const std::vector<SpecDiagnostic>& diags, std::ostream& os) {
  for (const auto& d : diags) os << d.describe() << '\n';
}

std::optional<json> read_json_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return std::nullopt;
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto doc = read_json_file(path, err);
  if (!doc) return kExitValidation;
  const SpecLoad load = load_cloud_spec(*doc);
  print_diagnostics(load.diagnostics, load.ok() ? out : err);
  if (!load.ok()) return kExitValidation;
  const WedgeCloud cloud = build_cloud(*load.spec);
  out << "ok: " << cloud.c_side().size() << " C-side points, " << cloud.y_side().size() - 1
      << " Y-side points, " << cloud.vertices().size() << " vertices, p = " << cloud.params().p.to_string() << '\n';
  return kExitOk;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || item.empty()) throw std::invalid_argument("bad scale '" + item + "' in --t-grid");
    out.push_back(v);
  }
  return out;
}

json simplex_list(const SimplicialComplex& k) {
  json out = json::array();
  for (int d = 0; d <= k.max_dim(); ++d)
    for (const Simplex& s : k.simplices(d)) out.push_back(s.vertices());
  return out;
}

json audit_json(const WedgeCloud& cloud, const std::vector<double>& grid, int max_dim, const WedgeOracles& oracles,
                const BettiProfile& profile, const std::optional<Scenario>& scenario, bool& failed) {
  json a;
  const AuditReport dec = decomposition_audit(cloud, grid, max_dim, &oracles);
  a["decomposition"] = {{"checks", dec.checks}, {"failures", dec.failures}};
  failed = failed || !dec.ok();

  json attach = json::array();
  if (cloud.y_side().size() > 1)
    for (std::size_t x = 0; x < cloud.c_side().size(); ++x) {
      const AttachmentBounds b = attachment_audit(cloud, x);
      attach.push_back({{"point", cloud.c_side().metric().label(x)},
                        {"lower", b.lower},
                        {"upper", b.upper},
                        {"cap", b.cap},
                        {"holds", b.holds()}});
      failed = failed || !b.holds();
    }
  a["attachment"] = attach;

  json homology = json::array();
  for (const auto& e : profile.per_scale) {
    const auto& b = e.betti;
    json row = {{"t", e.t}};
    row["eulerMatches"] = b.euler == b.betti_euler();
    row["componentsMatch"] = b.betti[0] == component_count(e.complex);
    failed = failed || !row["eulerMatches"].get<bool>() || !row["componentsMatch"].get<bool>();
    if (e.complex.dimension() <= 1 && b.betti.size() > 1) {
      const long graph = static_cast<long>(b.counts[1]) - static_cast<long>(b.counts[0]) + static_cast<long>(b.betti[0]);
      row["graphFormulaMatches"] = graph == static_cast<long>(b.betti[1]);
      failed = failed || !row["graphFormulaMatches"].get<bool>();
    }
    homology.push_back(row);
  }
  a["homology"] = homology;

  if (scenario) {
    json exp = json::array();
    for (const auto& o : check_expectations(*scenario)) {
      exp.push_back({{"complex", to_string(o.expectation.kind)},
                     {"t", o.expectation.t},
                     {"note", o.expectation.note},
                     {"pass", o.pass},
                     {"detail", o.detail}});
      failed = failed || !o.pass;
    }
    a["expectations"] = exp;
  }
  a["pass"] = !failed;
  return a;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

void emit_csv(std::ostream& os, const FiniteMetric& table, const std::vector<std::string>& labels,
              const BettiProfile& profile, int max_dim) {
  os << "# distance table\n";
  os << "vertex";
  for (const auto& l : labels) os << ',' << l;
  os << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    os << labels[i];
    for (std::size_t j = 0; j < table.size(); ++j) os << ',' << fmt(table(i, j));
    os << '\n';
  }
  os << "# betti curve (" << to_string(profile.kind) << ")\n";
  os << 't';
  for (int k = 0; k <= max_dim; ++k) os << ",b" << k;
  os << '\n';
  for (const auto& e : profile.per_scale) {
    os << fmt(e.t);
    for (std::size_t b : e.betti.betti) os << ',' << b;
    os << '\n';
  }
}

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  if (o.scenario.empty() == o.file.empty()) {
    err << "error: give exactly one of --scenario and --file\n";
    return kExitValidation;
  }
  std::optional<Scenario> scenario;
  SpecLoad load;
  if (!o.scenario.empty()) {
    try {
      scenario = make_scenario(o.scenario, o.scenario_opts);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitValidation;
    }
    load = load_cloud_spec(to_json(scenario->spec));
  } else {
    const auto doc = read_json_file(o.file, err);
    if (!doc) return kExitValidation;
    load = load_cloud_spec(*doc);
  }
  print_diagnostics(load.diagnostics, err);
  if (!load.ok()) return kExitValidation;
  const CloudSpec& spec = *load.spec;
  const WedgeCloud cloud = build_cloud(spec);

  std::vector<double> grid = o.t;
  if (!o.t_grid.empty()) {
    try {
      const auto more = parse_grid(o.t_grid);
      grid.insert(grid.end(), more.begin(), more.end());
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitValidation;
    }
  }
  if (grid.empty()) grid = scenario ? scenario->grid : std::vector<double>{0.5, 1.0, 1.5, 2.0};
  for (double t : grid)
    if (!(t >= 0.0) || !std::isfinite(t)) {
      err << "error: scales must be finite and nonnegative, got " << t << '\n';
      return kExitValidation;
    }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  ComplexKind kind = scenario ? scenario->kind : ComplexKind::Rips;
  if (!o.complex.empty()) {
    try {
      kind = parse_complex_kind(o.complex);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitValidation;
    }
  }
  const int max_dim = o.max_dim >= 0 ? o.max_dim
                      : scenario     ? scenario->max_dim
                                     : default_max_dim(cloud.vertices().size());

  const WedgeOracles oracles = ambient_oracles(spec, cloud);
  const FiniteMetric table = full_distance_table(cloud);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < cloud.vertices().size(); ++v) labels.push_back(cloud.vertex_label(v));

  BettiProfile profile;
  json audit;
  bool audit_failed = false;
  try {
    profile = betti_sweep(cloud, grid, kind, max_dim, &oracles);
    if (o.audit) audit = audit_json(cloud, grid, max_dim, oracles, profile, scenario, audit_failed);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << " (vertices " << Simplex(e.simplex()).to_string() << ")\n";
    return kExitSolver;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "; lower --maxdim or the scale\n";
    return kExitValidation;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << '\n';
      return kExitValidation;
    }
  }
  std::ostream& os = o.out.empty() ? out : file;

  if (o.emit == "csv") {
    emit_csv(os, table, labels, profile, max_dim);
  } else {
    json report;
    if (scenario) report["scenario"] = scenario->id;
    report["cloud"] = to_json(spec);
    report["vertices"] = labels;
    report["distanceTable"] = table.table();
    const RadialProfile radial = RadialProfile::of(cloud);
    report["radialProfile"] = {{"rC", radial.r_c}, {"rY", radial.r_y}};
    report["complex"] = to_string(kind);
    report["maxDim"] = max_dim;
    json scales = json::array();
    for (const auto& e : profile.per_scale)
      scales.push_back({{"t", e.t},
                        {"simplices", simplex_list(e.complex)},
                        {"betti", e.betti.betti},
                        {"counts", e.betti.counts},
                        {"euler", e.betti.euler},
                        {"contractible", e.betti.contractible}});
    report["scales"] = scales;
    json changes = json::array();
    for (std::size_t i : profile.changes) changes.push_back({profile.per_scale[i - 1].t, profile.per_scale[i].t});
    report["bettiChanges"] = changes;
    if (o.audit) report["audit"] = audit;
    os << report.dump(2) << '\n';
  }
  if (audit_failed) {
    err << "audit failed\n";
    return kExitAudit;
  }
  return kExitOk;
}

int cmd_reproduce(bool list, const std::vector<int>& only, std::ostream& out) {
  bool all_pass = true;
  for (const AcceptanceRow& row : acceptance_rows()) {
    if (!only.empty() && std::find(only.begin(), only.end(), row.id) == only.end()) continue;
    if (list) {
      out << std::setw(2) << row.id << "  " << row.title << '\n';
      continue;
    }
    RowResult r;
    try {
      r = row.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && r.pass;
    out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << row.id << "  " << row.title << ": " << r.detail
        << '\n';
  }
  if (list) {
    out << "\nscenarios:";
    for (const auto& id : scenario_ids()) out << ' ' << id;
    out << '\n';
  }
  return all_pass ? kExitOk : kExitAudit;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed CP / non-CP point clouds: wedge metrics, Rips and Cech complexes, homology"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a cloud file and report per-field diagnostics");
  validate->add_option("file", validate_path, "cloud JSON")->required();

  RunOptions ro;
  auto* run = app.add_subcommand("run", "build complexes and Betti curves for a scenario or cloud file");
  run->add_option("--scenario", ro.scenario, "built-in scenario id");
  run->add_option("--file", ro.file, "cloud JSON (a previous report is accepted too)");
  run->add_option("--t", ro.t, "scale (repeatable)");
  run->add_option("--t-grid", ro.t_grid, "comma-separated scales");
  run->add_option("--complex", ro.complex, "rips | cech-intrinsic | cech-ambient");
  run->add_option("--maxdim", ro.max_dim, "largest simplex dimension")->check(CLI::NonNegativeNumber);
  run->add_option("--emit", ro.emit, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--audit", ro.audit, "run the decomposition, sandwich, attachment and homology audits");
  run->add_option("--out", ro.out, "write the report here instead of stdout");
  run->add_option("--m", ro.scenario_opts.m, "kmn: number of C-side points")->capture_default_str();
  run->add_option("--n", ro.scenario_opts.n, "kmn: number of Y-side points")->capture_default_str();
  run->add_option("--r-plus", ro.scenario_opts.r_plus, "k22, mixed-loop: radius of y+")->capture_default_str();
  run->add_option("--r-minus", ro.scenario_opts.r_minus, "k22, mixed-loop: radius of y-")->capture_default_str();
  run->add_option("--D", ro.scenario_opts.D, "k22, mixed-loop: d(y+, y-), at most r+ + r-")->capture_default_str();
  run->add_option("--n-max", ro.scenario_opts.n_max, "anchor-separation: number of psi_n")->capture_default_str();

  bool list = false;
  std::vector<int> rows;
  auto* repro = app.add_subcommand("reproduce-paper", "run every acceptance row and print a pass/fail table");
  repro->add_flag("--list", list, "print the row and scenario catalog without running");
  repro->add_option("--row", rows, "run only these rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_path, out, err);
    if (run->parsed()) return cmd_run(ro, out, err);
    return cmd_reproduce(list, rows, out);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace bk

// Command-line front end: single eigenvalues, CSV sweeps, figure data and the
// verification suites.
//
// Exit status: 0 on success, 1 when a verification suite fails, 2 on invalid
// arguments or any other error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "npeig/npeig.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  int dim = 3;
  int n = 0;
  std::vector<int> n_list;
  std::optional<double> k;
  double k_min = 0.0;
  std::optional<double> k_max;
  int k_steps = 1;
  double radius = 1.0;
  std::string method = "auto";
  std::string out;
  std::string suite;
  std::optional<double> tol;
  std::vector<int> which;
};

// Thrown for arguments that parse but do not make sense together.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

npeig::Method resolve_method(const Options& o) {
  const auto m = npeig::parse_method(o.method, o.dim);
  if (!m) throw UsageError("method '" + o.method + "' is not available in dimension " + std::to_string(o.dim));
  return *m;
}

void add_dim(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim", o.dim, "2 for the disk, 3 for the ball")->check(CLI::IsMember({2, 3}));
}

void add_method(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "a, b, c (3D only), leading or auto")
      ->check(CLI::IsMember({"a", "b", "c", "leading", "auto"}));
}

int run_eig(const Options& o) {
  const npeig::EigenRecord r = npeig::evaluate(o.dim, o.n, o.k.value_or(0.0), o.radius, resolve_method(o));
  std::printf("dim=%d n=%d k=%.15g radius=%.15g method=%s re=%.15g im=%.15g abs=%.15g\n", r.dimension, r.n, r.k,
              r.radius, std::string(npeig::to_string(r.method)).c_str(), r.value.real() + 0.0, r.value.imag() + 0.0,
              std::abs(r.value));
  return kExitOk;
}

int run_sweep(const Options& o) {
  npeig::SweepGrid grid;
  grid.dimension = o.dim;
  grid.n_list = o.n_list;
  if (grid.n_list.empty()) grid.n_list.push_back(o.n);
  if (o.k) {
    grid.k_min = *o.k;
    grid.k_max = *o.k;
    grid.k_steps = 1;
  } else {
    grid.k_min = o.k_min;
    grid.k_max = o.k_max.value_or(o.k_min);
    grid.k_steps = o.k_steps;
  }
  grid.radius = o.radius;
  grid.method = resolve_method(o);
  const std::vector<npeig::EigenRecord> rows = npeig::run_sweep(grid);
  if (o.out.empty()) {
    npeig::write_csv(std::cout, rows);
  } else {
    npeig::write_csv_file(o.out, rows);
  }
  return kExitOk;
}

int run_figures(const Options& o) {
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw npeig::Error("cannot create directory " + dir.string() + ": " + ec.message());
  for (const npeig::FigureSpec& spec : npeig::figure_specs()) {
    const int index = spec.name.back() - '0';
    if (!o.which.empty() && std::find(o.which.begin(), o.which.end(), index) == o.which.end()) continue;
    const std::filesystem::path path = dir / (spec.name + ".csv");
    npeig::write_csv_file(path, npeig::run_figure(spec));
    std::cout << path.string() << '\n';
  }
  return kExitOk;
}

nlohmann::json to_json(const npeig::SuiteResult& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const npeig::VerificationReport& r : s.checks) {
    nlohmann::json j = {{"check", r.check},         {"cases", r.cases}, {"max_residual", r.max_residual},
                        {"tolerance", r.tolerance}, {"pass", r.pass},   {"worst_n", r.worst_n}};
    j["worst_k"] = std::isnan(r.worst_k) ? nlohmann::json(nullptr) : nlohmann::json(r.worst_k);
    if (!r.note.empty()) j["note"] = r.note;
    checks.push_back(std::move(j));
  }
  return {{"suite", s.suite}, {"pass", s.pass()}, {"checks", std::move(checks)}};
}

int run_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (auto n : npeig::kSuiteNames) names.emplace_back(n);
  } else {
    names.push_back(o.suite);
  }
  bool all_pass = true;
  nlohmann::json doc = nlohmann::json::array();
  for (const std::string& name : names) {
    const std::optional<npeig::SuiteResult> result = npeig::run_suite(name, o.tol);
    if (!result) throw UsageError("unknown suite '" + name + "'");
    for (const npeig::VerificationReport& r : result->checks) {
      std::printf("%-4s %s/%s cases=%ld max_residual=%.3e tolerance=%.3e worst_n=%d worst_k=%.6g%s%s\n",
                  r.pass ? "PASS" : "FAIL", r.suite.c_str(), r.check.c_str(), r.cases, r.max_residual, r.tolerance,
                  r.worst_n, r.worst_k, r.note.empty() ? "" : " ", r.note.c_str());
    }
    std::printf("suite %s: %s\n", result->suite.c_str(), result->pass() ? "PASS" : "FAIL");
    all_pass = all_pass && result->pass();
    doc.push_back(to_json(*result));
  }
  if (!o.out.empty()) {
    std::ofstream os(o.out, std::ios::binary | std::ios::trunc);
    if (!os) throw npeig::Error("cannot open " + o.out + " for writing");
    os << (doc.size() == 1 ? doc.front() : doc).dump(2) << '\n';
    if (!os) throw npeig::Error("write failed for " + o.out);
  }
  return all_pass ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumann-Poincare eigenvalues on the unit ball and disk"};
  app.require_subcommand(1);
  Options o;

  CLI::App* eig = app.add_subcommand("eig", "evaluate one eigenvalue");
  add_dim(eig, o);
  eig->add_option("--n", o.n, "mode order")->required()->check(CLI::NonNegativeNumber);
  eig->add_option("--k", o.k, "wavenumber (default 0)");
  eig->add_option("--radius", o.radius, "radius of the ball or disk");
  add_method(eig, o);

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate an (n, k) grid and write CSV");
  add_dim(sweep, o);
  auto* n_opt = sweep->add_option("--n", o.n, "single mode order")->check(CLI::NonNegativeNumber);
  sweep->add_option("--n-list", o.n_list, "comma separated mode orders")->delimiter(',')->excludes(n_opt);
  auto* k_opt = sweep->add_option("--k", o.k, "single wavenumber");
  sweep->add_option("--k-min", o.k_min, "first wavenumber")->excludes(k_opt);
  sweep->add_option("--k-max", o.k_max, "last wavenumber (default k-min)")->excludes(k_opt);
  sweep->add_option("--k-steps", o.k_steps, "number of wavenumbers, endpoints included")->excludes(k_opt);
  sweep->add_option("--radius", o.radius, "radius of the ball or disk");
  add_method(sweep, o);
  sweep->add_option("--out", o.out, "output CSV (default stdout)");

  CLI::App* figures = app.add_subcommand("figures", "write fig1.csv ... fig5.csv");
  figures->add_option("--out", o.out, "output directory (default .)");
  figures->add_option("--which", o.which, "figure numbers to write (default all)")
      ->delimiter(',')
      ->check(CLI::Range(1, 5));

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name or all")->required();
  verify->add_option("--tol", o.tol, "override the tolerance of the primary residual checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out, "also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eig) return run_eig(o);
    if (*sweep) return run_sweep(o);
    if (*figures) return run_figures(o);
    if (*verify) return run_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

// Parameter sweeps over (n, k) grids, CSV emission, and the parameter sets of
// the five published figures.
//
// CSV rows have the header `dim,n,k,method,re,im,abs`, LF line endings and
// numbers in shortest round-trip decimal form, so output is byte-stable for a
// given platform.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "npeig/ball.hpp"
#include "npeig/disk.hpp"
#include "npeig/errors.hpp"
#include "npeig/record.hpp"

namespace npeig {

inline constexpr std::string_view kCsvHeader = "dim,n,k,method,re,im,abs";

/// Method names accepted on the command line: a, b, c, leading, auto.
/// In 2D `leading` selects the large-order term -k^2/(4n(n-1)(n+1)); `c` has
/// no 2D counterpart. Returns nullopt when the name is not valid for the
/// dimension.
inline std::optional<Method> parse_method(std::string_view name, int dimension) {
  if (name == "a") return Method::FormA;
  if (name == "b" || name == "auto") return Method::FormB;
  if (name == "c") return dimension == 3 ? std::optional(Method::FormC) : std::nullopt;
  if (name == "leading") return dimension == 3 ? Method::Leading : Method::LargeNAsymptotic;
  return std::nullopt;
}

/// Eigenvalue in the given dimension (2 = disk, 3 = ball).
inline EigenRecord evaluate(int dimension, int n, double k, double radius, Method method) {
  if (dimension == 3) return evaluate_ball(n, k, radius, method);
  if (dimension == 2) return evaluate_disk(n, k, radius, method);
  detail::throw_domain("evaluate", "dimension must be 2 or 3");
}

/// Uniform inclusive wavenumber grid k_i = (k_min (s-1-i) + k_max i) / (s-1).
inline std::vector<double> uniform_grid(double k_min, double k_max, int steps) {
  if (!(k_min >= 0.0) || !(k_max >= k_min) || std::isinf(k_max)) {
    detail::throw_domain("uniform_grid", "need 0 <= k_min <= k_max < inf");
  }
  if (steps < 1) detail::throw_domain("uniform_grid", "k_steps must be >= 1");
  if (steps == 1) {
    if (k_min != k_max) detail::throw_domain("uniform_grid", "k_steps = 1 needs k_min = k_max");
    return {k_min};
  }
  std::vector<double> ks(static_cast<std::size_t>(steps));
  const double last = steps - 1;
  for (int i = 0; i < steps; ++i) ks[static_cast<std::size_t>(i)] = (k_min * (last - i) + k_max * i) / last;
  return ks;
}

struct SweepGrid {
  int dimension = 3;
  std::vector<int> n_list;
  double k_min = 0.0;
  double k_max = 0.0;
  int k_steps = 1;
  Method method = Method::FormB;
  double radius = 1.0;
};

/// Evaluates the grid ordered by n (in list order), then by ascending k.
inline std::vector<EigenRecord> run_sweep(const SweepGrid& grid) {
  const std::vector<double> ks = uniform_grid(grid.k_min, grid.k_max, grid.k_steps);
  std::vector<EigenRecord> out;
  out.reserve(grid.n_list.size() * ks.size());
  for (int n : grid.n_list) {
    for (double k : ks) out.push_back(evaluate(grid.dimension, n, k, grid.radius, grid.method));
  }
  return out;
}

/// Shortest decimal string that reads back to the same double; -0 prints as 0.
inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline void write_csv_row(std::ostream& os, const EigenRecord& r) {
  os << r.dimension << ',' << r.n << ',' << format_number(r.k) << ',' << to_string(r.method) << ','
     << format_number(r.value.real()) << ',' << format_number(r.value.imag()) << ','
     << format_number(std::abs(r.value)) << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<EigenRecord>& records) {
  os << kCsvHeader << '\n';
  for (const EigenRecord& r : records) write_csv_row(os, r);
}

/// Writes records to a file in binary mode so line endings stay LF.
inline void write_csv_file(const std::filesystem::path& path, const std::vector<EigenRecord>& records) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  write_csv(os, records);
  os.flush();
  if (!os) throw Error("write failed for " + path.string());
}

/// Parameter set of one figure: every n against every k, each with every method.
struct FigureSpec {
  std::string name;
  int dimension = 3;
  std::vector<int> n_list;
  std::vector<double> k_list;
  std::vector<Method> methods;
};

inline std::vector<int> order_range(int first, int last) {
  std::vector<int> ns;
  for (int n = first; n <= last; ++n) ns.push_back(n);
  return ns;
}

inline std::vector<FigureSpec> figure_specs() {
  const std::vector<double> k_0_20 = uniform_grid(0.0, 20.0, 401);
  return {
      {"fig1", 3, {0, 5, 10, 15, 20}, k_0_20, {Method::Leading}},
      {"fig2", 3, {6, 18, 30, 42}, k_0_20, {Method::Leading}},
      {"fig3", 3, order_range(0, 30), {0.0, 7.5, 15.0, 22.5, 30.0}, {Method::Leading}},
      {"fig4", 2, {1, 10, 19, 28}, k_0_20, {Method::FormB}},
      {"fig5", 2, order_range(0, 36), {0.1, 5.1, 10.1, 15.1}, {Method::FormB, Method::LargeNAsymptotic}},
  };
}

/// Rows ordered by n, then k, then method. The large-order term is emitted
/// only where it is defined (n >= 2).
inline std::vector<EigenRecord> run_figure(const FigureSpec& spec) {
  std::vector<EigenRecord> out;
  for (int n : spec.n_list) {
    for (double k : spec.k_list) {
      for (Method m : spec.methods) {
        if (m == Method::LargeNAsymptotic && n < 2) continue;
        out.push_back(evaluate(spec.dimension, n, k, 1.0, m));
      }
    }
  }
  return out;
}

/// Writes figN.csv for every figure into dir and returns the written paths.
inline std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> paths;
  for (const FigureSpec& spec : figure_specs()) {
    const std::filesystem::path path = dir / (spec.name + ".csv");
    write_csv_file(path, run_figure(spec));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace npeig

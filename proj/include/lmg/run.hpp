// Front-end plumbing shared by the lmgq command-line tool and the test
// suites: run configuration (JSON), purity traces and lambda sweeps with
// deterministic CSV/JSON serialization, figure-data reproduction, and the
// cross-method validation report.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmg/dynamics.hpp"
#include "lmg/model.hpp"

namespace lmg::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform grid; count == 1 collapses to {start}.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> points() const;
};

enum class Method { exact, closed_form, hp_limit, oracle };

std::string to_string(Method m);
Method method_from_string(const std::string& s);
Coupling coupling_from_string(const std::string& s);

enum class OutputFormat { csv, json };

struct RunConfig {
  int n = 0;
  Grid lambda{0.0, 0.0, 1};
  Coupling coupling = Coupling::case_i;
  std::optional<double> lambda_prime;
  QubitState qubit_init = balanced_qubit();
  Grid t{0.0, 10.0, 2001};
  std::vector<Method> methods{Method::exact};
  std::string output;
  OutputFormat format = OutputFormat::csv;
  int jobs = 0;  // 0 = all hardware threads
};

// Parses the JSON config file (lower-snake keys mirroring RunConfig). Throws
// ConfigError on malformed content, IoError if the file cannot be read.
RunConfig load_config(const std::string& path);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

// Single-lambda trace: one purity column per requested method.
// CSV columns: t,purity_<method>,... JSON mirrors the same arrays plus meta.
void run_trace(const RunConfig& config);

// Lambda-major long-format sweep: lambda,t,purity_<method>,...
void run_sweep(const RunConfig& config);

enum class Figure { fig1, fig2, fig3, fig4 };

// Writes <outdir>/<fig>.csv (sweep schema) plus a parameter sidecar
// <outdir>/<fig>.json. fig1/fig2: case-i, N = 5000; fig3/fig4: case-ii,
// N = 1000.
void run_figures(Figure fig, const std::string& outdir, int jobs = 0);

struct ValidationRow {
  std::string comparison;
  int n = 0;
  double lambda = 0.0;
  std::string case_name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;

  bool all_pass() const;
  std::size_t failures() const;
};

// Runs the full cross-method comparison matrix: closed form vs exact
// (identity, 1e-12), exact vs dense Dicke oracle (1e-10), Dicke oracle vs
// full spin basis (1e-10), H-P limits vs exact in both phases, and the
// side-by-side sine-argument convention check.
ValidationReport run_validate();

void write_validation_report(const ValidationReport& report, const std::string& path,
                             OutputFormat format);

// Fundamental period of an oscillating trace, measured as the mean spacing of
// the near-maximum clusters (the purity returns to ~1 once per period; any
// secondary local maxima sit well below the threshold). Throws if fewer than
// two clusters are found. Assumes a single oscillation frequency; traces that
// beat between two close frequencies need dominant_angular_frequency instead.
double estimate_period(std::span<const double> times, std::span<const double> values);

// Angular frequency of the strongest non-DC component of a uniformly sampled
// trace (Hann-windowed DFT with parabolic peak interpolation).
double dominant_angular_frequency(std::span<const double> times,
                                  std::span<const double> values);

}  // namespace lmg::cli

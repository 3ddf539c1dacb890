// lmgq: purity dynamics of a central qubit coupled to an isotropic LMG bath.
//
// Subcommands: trace (single lambda), sweep (lambda grid), figures
// (reference data sets), validate (cross-method comparison report).
// Exit codes: 0 success, 1 config error, 2 validation failure, 3 I/O error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmg/run.hpp"

namespace {

using lmg::cli::ConfigError;
using lmg::cli::IoError;
using lmg::cli::RunConfig;

struct Overrides {
  std::string config_path;
  std::optional<int> n;
  std::optional<double> lambda;
  std::optional<std::string> case_name;
  std::optional<double> t_start;
  std::optional<double> t_stop;
  std::optional<int> t_count;
  std::optional<std::string> methods;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<int> jobs;
  std::optional<long> seed;  // reserved; dynamics are deterministic
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "JSON config file");
  cmd->add_option("--n", o.n, "bath size N");
  cmd->add_option("--lambda", o.lambda, "bath coupling lambda");
  cmd->add_option("--case", o.case_name, "coupling case: case-i, case-ii, explicit");
  cmd->add_option("--t-start", o.t_start, "time grid start");
  cmd->add_option("--t-stop", o.t_stop, "time grid stop");
  cmd->add_option("--t-count", o.t_count, "time grid point count");
  cmd->add_option("--methods", o.methods,
                  "comma-separated: exact,closed-form,hp-limit,oracle");
  cmd->add_option("--output", o.output, "output path");
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("--jobs", o.jobs, "worker threads (default: all cores)");
  cmd->add_option("--seed", o.seed, "reserved, unused");
}

RunConfig build_config(const Overrides& o, const std::string& default_output) {
  RunConfig cfg;
  if (!o.config_path.empty()) cfg = lmg::cli::load_config(o.config_path);
  if (o.n) cfg.n = *o.n;
  if (o.lambda) cfg.lambda = lmg::cli::Grid{*o.lambda, *o.lambda, 1};
  if (o.case_name) cfg.coupling = lmg::cli::coupling_from_string(*o.case_name);
  if (o.t_start) cfg.t.start = *o.t_start;
  if (o.t_stop) cfg.t.stop = *o.t_stop;
  if (o.t_count) cfg.t.count = *o.t_count;
  if (o.methods) {
    cfg.methods.clear();
    std::stringstream ss(*o.methods);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) cfg.methods.push_back(lmg::cli::method_from_string(item));
  }
  if (o.output) cfg.output = *o.output;
  if (o.format) {
    if (*o.format == "csv")
      cfg.format = lmg::cli::OutputFormat::csv;
    else if (*o.format == "json")
      cfg.format = lmg::cli::OutputFormat::json;
    else
      throw ConfigError("format must be csv or json");
  }
  if (o.jobs) cfg.jobs = *o.jobs;
  if (cfg.output.empty()) cfg.output = default_output;
  return cfg;
}

int run_figures_cmd(const std::string& which, const std::string& outdir, int jobs) {
  const std::vector<std::pair<std::string, lmg::cli::Figure>> all = {
      {"fig1", lmg::cli::Figure::fig1},
      {"fig2", lmg::cli::Figure::fig2},
      {"fig3", lmg::cli::Figure::fig3},
      {"fig4", lmg::cli::Figure::fig4}};
  bool hit = false;
  for (const auto& [name, fig] : all) {
    if (which == "all" || which == name) {
      lmg::cli::run_figures(fig, outdir, jobs);
      std::cout << "wrote " << (outdir.empty() ? "." : outdir) << "/" << name << ".csv\n";
      hit = true;
    }
  }
  if (!hit) throw ConfigError("unknown figure '" + which + "'");
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"central-qubit purity in an isotropic LMG bath"};
  app.require_subcommand(1);

  Overrides trace_o, sweep_o, validate_o;
  CLI::App* trace = app.add_subcommand("trace", "purity trace at a single lambda");
  add_common_flags(trace, trace_o);
  CLI::App* sweep = app.add_subcommand("sweep", "purity over a lambda x t grid");
  add_common_flags(sweep, sweep_o);

  std::string fig_which = "all";
  std::string fig_outdir = ".";
  std::optional<int> fig_jobs;
  CLI::App* figures = app.add_subcommand("figures", "reference data sets");
  figures->add_option("--fig", fig_which, "fig1, fig2, fig3, fig4 or all");
  figures->add_option("--output", fig_outdir, "output directory");
  figures->add_option("--jobs", fig_jobs, "worker threads");

  CLI::App* validate = app.add_subcommand("validate", "cross-method validation report");
  add_common_flags(validate, validate_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (trace->parsed()) {
      lmg::cli::run_trace(build_config(trace_o, "trace.csv"));
      return 0;
    }
    if (sweep->parsed()) {
      lmg::cli::run_sweep(build_config(sweep_o, "sweep.csv"));
      return 0;
    }
    if (figures->parsed()) {
      return run_figures_cmd(fig_which, fig_outdir, fig_jobs.value_or(0));
    }
    if (validate->parsed()) {
      const lmg::cli::ValidationReport report = lmg::cli::run_validate();
      const bool json = validate_o.format && *validate_o.format == "json";
      const std::string path =
          validate_o.output.value_or(json ? "validation.json" : "validation.csv");
      lmg::cli::write_validation_report(
          report, path,
          json ? lmg::cli::OutputFormat::json : lmg::cli::OutputFormat::csv);
      for (const auto& row : report.rows) {
        if (!row.pass)
          std::cout << "FAIL " << row.comparison << " n=" << row.n
                    << " lambda=" << row.lambda << " " << row.case_name
                    << " deviation=" << row.deviation << " tolerance=" << row.tolerance
                    << "\n";
      }
      std::cout << "validation: " << report.rows.size() << " rows, " << report.failures()
                << " failures, report " << path << "\n";
      return report.all_pass() ? 0 : 2;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  } catch (...) {
    std::cerr << "error: internal: unknown\n";
    return 1;
  }
}

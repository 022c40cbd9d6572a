/*
 * Copyright (C) 2026 The angvel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "angvel/analysis.hpp"
#include "angvel/error.hpp"
#include "angvel/fileio.hpp"
#include "angvel/observer.hpp"
#include "angvel/scenario_file.hpp"
#include "angvel/sim.hpp"
#include "angvel/svg.hpp"
#include "angvel/table.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kGainsUnsatisfied = 2, kIntegrationFailure = 3 };

using angvel::format_number;

struct SimArgs {
  std::string scenario;
  std::string out;
  std::string svg;
  std::vector<std::string> svg_cols{"wx", "whx"};
  bool svg_log{false};
};

struct GainsArgs {
  std::string scenario;
  double omega_hat_bound{-1.0};
};

struct FitArgs {
  std::string traj;
  std::string col{"znorm"};
  double t0{0.0};
  double t1{0.0};
};

struct PlotArgs {
  std::string traj;
  std::vector<std::string> cols;
  std::string out;
  std::string x{"t"};
  bool log_y{false};
};

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_sim(const SimArgs& a) {
  const angvel::Scenario sc = angvel::parse_scenario(angvel::read_file(a.scenario));
  for (const auto& w : sc.warnings()) std::cerr << "warning: " << w << '\n';

  const angvel::Trajectory traj = angvel::run(sc);
  angvel::write_file_atomic(a.out, angvel::write_csv(traj));
  angvel::write_file_atomic(a.out + ".effective.scn", angvel::dump_scenario(sc));
  if (!a.svg.empty()) {
    angvel::write_file_atomic(a.svg, angvel::render_svg(traj, a.svg_cols, {.log_y = a.svg_log}));
  }

  const auto& first = traj.samples.front();
  const auto& last = traj.samples.back();
  std::cout << "samples = " << traj.samples.size() << '\n'
            << "t_final = " << format_number(last.t) << '\n'
            << "znorm_initial = " << format_number(angvel::norm(first.error.z)) << '\n'
            << "znorm_final = " << format_number(angvel::norm(last.error.z)) << '\n'
            << "e1norm_final = " << format_number(angvel::norm(last.error.e1)) << '\n'
            << "e2norm_final = " << format_number(angvel::norm(last.error.e2)) << '\n'
            << "V_final = " << format_number(last.lyapunov.V) << '\n'
            << "max_drift = " << format_number(angvel::orthonormality_drift(traj)) << '\n'
            << "a2_violations = " << traj.a2_violations << '\n';
  if (std::holds_alternative<angvel::TheoremL>(sc.gains.l_mode)) {
    std::cout << "v_increases = " << traj.v_increases << '\n';
  }
  if (traj.a2_violations > 0) {
    std::cerr << "warning: |omega| exceeded omega_max at " << traj.a2_violations
              << " recorded samples; the convergence guarantee does not apply there\n";
  }
  return kOk;
}

int cmd_gains(const GainsArgs& a) {
  const angvel::Scenario sc = angvel::parse_scenario(angvel::read_file(a.scenario));
  const double bound = a.omega_hat_bound >= 0.0 ? a.omega_hat_bound : sc.omega_hat_bound;
  const auto rep = angvel::check_conditions(sc.gains, sc.params, sc.R0.row(0), sc.R0.row(1), bound);

  std::cout << "mu = " << format_number(rep.mu) << '\n'
            << "gain1_nominal = " << verdict(rep.gain1_nominal) << "  # mu > omega_max + 3/2 = "
            << format_number(rep.gain1_threshold_nominal) << '\n'
            << "gain1_strict = " << verdict(rep.gain1_strict) << "  # mu > J_M (omega_max + 3/2) = "
            << format_number(rep.gain1_threshold_strict) << '\n'
            << "omega_hat_bound = " << format_number(rep.omega_hat_bound) << '\n'
            << "l1 = " << format_number(rep.l1) << '\n'
            << "l_bound1 = " << format_number(rep.l_bound1) << '\n'
            << "gain2 = " << verdict(rep.gain2_ok) << "  # l1 > l_bound1\n"
            << "l2 = " << format_number(rep.l2) << '\n'
            << "l_bound2 = " << format_number(rep.l_bound2) << '\n'
            << "gain3 = " << verdict(rep.gain3_ok) << "  # l2 > l_bound2\n"
            << "suggested_k = " << format_number(rep.suggested_k) << "  # 1 + (omega_max + 3/2) J_M\n"
            << "result = " << (rep.satisfied() ? "satisfied" : "unsatisfied") << '\n';
  return rep.satisfied() ? kOk : kGainsUnsatisfied;
}

int cmd_fit(const FitArgs& a) {
  const angvel::Table table = angvel::read_csv(angvel::read_file(a.traj));
  const auto ts = table.column("t");
  const auto vs = table.column(a.col);
  std::vector<angvel::TimedValue> samples;
  samples.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) samples.push_back({ts[i], vs[i]});
  const auto fit = angvel::fit_rate(samples, a.t0, a.t1);
  std::cout << "column = " << a.col << '\n'
            << "lambda = " << format_number(fit.lambda) << '\n'
            << "log_c = " << format_number(fit.log_c) << '\n'
            << "r_squared = " << format_number(fit.r_squared) << '\n'
            << "n_points = " << fit.n_points << '\n'
            << "flat = " << (fit.flat ? "true" : "false") << '\n';
  return kOk;
}

int cmd_plot(const PlotArgs& a) {
  const angvel::Table table = angvel::read_csv(angvel::read_file(a.traj));
  angvel::write_file_atomic(a.out, angvel::render_svg(table, a.cols, {.x_column = a.x, .log_y = a.log_y}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angular velocity observer: simulate, check gains, fit rates, plot"};
  app.require_subcommand(1);

  SimArgs sim;
  auto* sim_cmd = app.add_subcommand("sim", "Run a scenario and write the trajectory CSV");
  sim_cmd->add_option("--scenario", sim.scenario, "Scenario file")->required();
  sim_cmd->add_option("--out", sim.out, "Trajectory CSV output")->required();
  sim_cmd->add_option("--svg", sim.svg, "Optional SVG plot output");
  sim_cmd->add_option("--svg-cols", sim.svg_cols, "Columns to plot")->capture_default_str();
  sim_cmd->add_flag("--svg-log", sim.svg_log, "Logarithmic y axis");

  GainsArgs gains;
  auto* gains_cmd = app.add_subcommand("gains", "Check the sufficient gain conditions");
  gains_cmd->add_option("--scenario", gains.scenario, "Scenario file")->required();
  gains_cmd->add_option("--omega-hat-bound", gains.omega_hat_bound,
                        "Override the scenario's |omega_hat| bound")
      ->check(CLI::NonNegativeNumber);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit an exponential decay rate to a CSV column");
  fit_cmd->add_option("--traj", fit.traj, "Trajectory CSV")->required();
  fit_cmd->add_option("--col", fit.col, "Column to fit")->capture_default_str();
  fit_cmd->add_option("--t0", fit.t0, "Window start")->required();
  fit_cmd->add_option("--t1", fit.t1, "Window end")->required();

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render CSV columns as an SVG line chart");
  plot_cmd->add_option("--traj", plot.traj, "Trajectory CSV")->required();
  plot_cmd->add_option("--cols", plot.cols, "Columns to plot")->required();
  plot_cmd->add_option("--out", plot.out, "SVG output")->required();
  plot_cmd->add_option("--x", plot.x, "Abscissa column")->capture_default_str();
  plot_cmd->add_flag("--log-y", plot.log_y, "Logarithmic y axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sim_cmd) return cmd_sim(sim);
    if (*gains_cmd) return cmd_gains(gains);
    if (*fit_cmd) return cmd_fit(fit);
    if (*plot_cmd) return cmd_plot(plot);
  } catch (const angvel::IntegrationError& e) {
    std::cerr << "integration failure: " << e.what() << '\n';
    return kIntegrationFailure;
  } catch (const angvel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

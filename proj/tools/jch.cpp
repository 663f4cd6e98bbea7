// Copyright 2026 The jch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// jch: ground-state sweeps of the coupled cavity array.
//
//   jch sweep --cavities 2 --delta-over-g -4:4:81 --t-over-g 0:2:41 --out sweep.csv
//   jch single --delta 3 --t 1 --g 0
//   jch validate-perturbation --cavities 4 --g-over-t 1e-3

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "jch/perturbation.hpp"
#include "jch/sweep.hpp"

namespace {

struct CommonOptions {
  std::size_t cavities = 2;
  int excitations = -1;
  std::string boundary = "open";
  std::string coupling = "uniform";
  std::uint64_t seed = jch::LanczosOptions{}.seed;
  double tol = jch::LanczosOptions{}.tol;
  std::size_t max_iter = jch::LanczosOptions{}.max_iter;
};

void add_common(CLI::App* app, CommonOptions& opts) {
  app->add_option("--cavities,-N", opts.cavities, "Number of cavities")->check(CLI::PositiveNumber);
  app->add_option("--excitations,-M", opts.excitations, "Total excitation number (default N)");
  app->add_option("--boundary", opts.boundary, "open|periodic")
      ->check(CLI::IsMember({"open", "periodic"}));
  app->add_option("--coupling", opts.coupling, "uniform|pair=I,J");
  app->add_option("--seed", opts.seed, "Lanczos start-vector seed");
  app->add_option("--tol", opts.tol, "Lanczos residual tolerance");
  app->add_option("--max-iter", opts.max_iter, "Lanczos iteration cap");
}

jch::SweepConfig to_config(const CommonOptions& opts) {
  jch::SweepConfig config;
  config.n_cavities = opts.cavities;
  if (opts.excitations >= 0) config.total_excitations = opts.excitations;
  config.boundary = jch::parse_boundary(opts.boundary);
  config.coupling = jch::CouplingPattern::parse(opts.coupling);
  config.solver.seed = opts.seed;
  config.solver.tol = opts.tol;
  config.solver.max_iter = opts.max_iter;
  return config;
}

int report_failures(const jch::SweepResult& result) {
  int code = 0;
  for (const auto& r : result.records) {
    if (r.status != jch::PointStatus::ok) {
      std::cerr << "solver failure at (" << r.delta_over_g << ", " << r.t_over_g
                << "): " << r.message << '\n';
      code = 2;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagonalization of a coupled cavity array with one two-level atom per cavity"};
  app.require_subcommand(1);

  CommonOptions sweep_opts;
  std::string delta_range = "-4:4:81";
  std::string t_range = "0:2:41";
  std::size_t workers = 1;
  std::string out_path;
  bool absolute = false;
  double sweep_g = 1.0;
  std::string locus_pair = "1,2";
  auto* sweep = app.add_subcommand("sweep", "Scan the delta/g - t/g plane and write CSV");
  add_common(sweep, sweep_opts);
  sweep->add_option("--delta-over-g", delta_range, "MIN:MAX:STEPS");
  sweep->add_option("--t-over-g", t_range, "MIN:MAX:STEPS");
  sweep->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "Output CSV path (stdout if omitted)");
  sweep->add_flag("--absolute", absolute, "Axes are delta and t in absolute units; see --g");
  sweep->add_option("--g", sweep_g, "Atom-photon coupling in absolute mode");
  sweep->add_option("--locus-pair", locus_pair, "Pair I,J whose non-analytic locus is reported");

  CommonOptions single_opts;
  double delta = 0.0;
  double hopping = 0.0;
  double single_g = 1.0;
  auto* single = app.add_subcommand("single", "Solve one parameter point in absolute units");
  add_common(single, single_opts);
  single->add_option("--delta", delta, "Detuning omega_a - omega_b")->required();
  single->add_option("--t", hopping, "Photon hopping")->required();
  single->add_option("--g", single_g, "Atom-photon coupling");

  std::size_t pert_cavities = 2;
  std::vector<double> g_over_t{1e-3};
  std::string sites = "1,2";
  std::uint64_t pert_seed = jch::LanczosOptions{}.seed;
  auto* pert = app.add_subcommand("validate-perturbation",
                                  "Compare the numerics with the first-order result at delta = 2t");
  pert->add_option("--cavities,-N", pert_cavities, "Number of cavities (periodic ring)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{12}));
  pert->add_option("--g-over-t", g_over_t, "One or more coupling strengths g/t");
  pert->add_option("--sites", sites, "Coupled pair I,J (one-based)");
  pert->add_option("--seed", pert_seed, "Lanczos start-vector seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      jch::SweepConfig config = to_config(sweep_opts);
      config.delta_over_g = jch::AxisRange::parse(delta_range);
      config.t_over_g = jch::AxisRange::parse(t_range);
      config.workers = workers;
      config.output_path = out_path;
      config.absolute = absolute;
      config.g = sweep_g;
      if (!absolute && sweep->count("--g") > 0) {
        throw std::invalid_argument("--g requires --absolute; scaled sweeps use g = 1");
      }
      const jch::SweepResult result = jch::run_sweep(config);
      if (out_path.empty()) jch::write_csv(std::cout, result);

      const jch::CouplingPattern pair = jch::CouplingPattern::parse("pair=" + locus_pair);
      if (pair.i < config.n_cavities && pair.j < config.n_cavities) {
        const auto locus = jch::locate_locus(result, pair.i, pair.j);
        std::cerr << "locus(" << locus_pair << "): " << locus.size() << " crossing points\n";
      }
      std::cerr << result.records.size() << " grid points, " << result.failures()
                << " solver failures\n";
      return report_failures(result);
    }

    if (*single) {
      jch::SweepConfig config = to_config(single_opts);
      config.absolute = true;
      config.g = single_g;
      config.delta_over_g = {delta, delta, 1};
      config.t_over_g = {hopping, hopping, 1};
      const jch::SweepResult result = jch::run_sweep(config);
      jch::write_csv(std::cout, result);
      return report_failures(result);
    }

    if (*pert) {
      const jch::CouplingPattern pair = jch::CouplingPattern::parse("pair=" + sites);
      if (pair.i >= pert_cavities || pair.j >= pert_cavities) {
        throw std::invalid_argument("--sites outside the ring");
      }
      jch::LanczosOptions options;
      options.seed = pert_seed;
      bool header = true;
      for (double g : g_over_t) {
        const auto report = jch::validate_against_numerics(pert_cavities, g, pair.i, pair.j, options);
        jch::write_report_csv(std::cout, report, header);
        header = false;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

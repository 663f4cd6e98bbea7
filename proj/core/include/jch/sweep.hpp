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

#ifndef JCH_SWEEP_HPP
#define JCH_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jch/eigensolver.hpp"
#include "jch/model.hpp"
#include "jch/observables.hpp"

namespace jch {

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;

  // Evenly spaced, endpoints included; a single step sits at `min`.
  double value(std::size_t k) const;
  std::vector<double> values() const;

  // "MIN:MAX:STEPS"
  static AxisRange parse(std::string_view text);
};

struct CouplingPattern {
  bool pair = false;
  std::size_t i = 0;  // zero-based
  std::size_t j = 1;

  // "uniform" or "pair=I,J" with one-based sites
  static CouplingPattern parse(std::string_view text);
  std::string to_string() const;
};

struct SweepConfig {
  std::size_t n_cavities = 2;
  std::optional<int> total_excitations;  // defaults to n_cavities
  AxisRange delta_over_g{-4.0, 4.0, 81};
  AxisRange t_over_g{0.0, 2.0, 41};
  Boundary boundary = Boundary::open;
  CouplingPattern coupling;
  LanczosOptions solver;
  std::size_t workers = 1;
  std::string output_path;
  // Scaled mode (default): g = 1 is the energy unit and the axes are delta/g, t/g.
  // Absolute mode: the axes are delta and t in the same units as `g`, which may be 0.
  bool absolute = false;
  double g = 1.0;

  int excitations() const { return total_excitations.value_or(static_cast<int>(n_cavities)); }
  double coupling_strength() const { return absolute ? g : 1.0; }
  void validate() const;
};

enum class PointStatus { ok, solver_failure };

struct SweepRecord {
  double delta_over_g = 0.0;
  double t_over_g = 0.0;
  PointStatus status = PointStatus::ok;
  std::string message;
  double ground_energy = 0.0;
  bool degenerate = false;
  double gap = 0.0;
  double avg_concurrence = 0.0;
  double visibility = 0.0;
  bool visibility_defined = true;
  double avg_excitation_variance = 0.0;
  std::vector<double> locus;                // pairs (1,2), (1,3), ..., (N-1,N)
  std::vector<double> excitation_variance;  // per site
};

struct SweepResult {
  std::size_t n_cavities = 0;
  std::size_t delta_steps = 0;
  std::size_t t_steps = 0;
  bool absolute = false;
  double g = 1.0;
  std::vector<SweepRecord> records;  // row-major: t outer, delta fastest

  const SweepRecord& at(std::size_t t_index, std::size_t delta_index) const {
    return records[t_index * delta_steps + delta_index];
  }
  std::size_t failures() const;
};

// Position of pair (i, j), i < j, in SweepRecord::locus.
std::size_t pair_slot(std::size_t i, std::size_t j, std::size_t n_cavities);

ModelParams point_params(const SweepConfig& config, double delta_axis, double t_axis);

// Runs model -> ground_state -> witness_set at one grid point. Solver
// failures are captured in the record.
SweepRecord solve_point(const SweepConfig& config, std::shared_ptr<const SectorBasis> basis,
                        double delta_axis, double t_axis);

// Every grid point on a bounded worker pool; one shared basis. Writes CSV to
// config.output_path when it is non-empty.
SweepResult run_sweep(const SweepConfig& config);

// schema=1 CSV: degenerate rows leave the concurrence columns empty, failed
// rows leave every numeric column empty.
void write_csv(std::ostream& out, const SweepResult& result);

struct LocusPoint {
  double delta_over_g = 0.0;
  double t_over_g = 0.0;
};

// Locus values on a t-major grid; NaN marks cells with no defined value.
struct LocusGrid {
  std::vector<double> delta_values;
  std::vector<double> t_values;
  std::vector<double> values;
};

LocusGrid locus_grid(const SweepResult& result, std::size_t i, std::size_t j);

// Linear-interpolated zero crossings of the locus value between adjacent
// cells, ordered by (t, delta). Empty when the sign never changes.
std::vector<LocusPoint> locate_locus(const LocusGrid& grid);
std::vector<LocusPoint> locate_locus(const SweepResult& result, std::size_t i, std::size_t j);

}  // namespace jch

#endif  // JCH_SWEEP_HPP

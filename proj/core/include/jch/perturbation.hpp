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

#ifndef JCH_PERTURBATION_HPP
#define JCH_PERTURBATION_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <memory>

#include "jch/eigensolver.hpp"
#include "jch/model.hpp"

namespace jch {

// First-order ground state at the g = 0 level crossing delta = 2t, with the
// coupling switched on only at sites i and j. Over the manifold
//   phi1 = |N>_0 |all g>,  phi2 = |N-1>_0 |e_i>,  phi3 = |N-1>_0 |e_j>,
//   phi4 = |N-2>_0 |e_i e_j>
// (|n>_0: n photons in the zero-momentum ring orbital) the state is
//   eta (phi1 + beta phi4) - (phi2 + phi3) / 2.
struct PerturbativeGroundState {
  std::size_t n_cavities = 0;
  double beta = 0.0;  // sqrt((N-1)/N)
  double eta = 0.0;   // sqrt(1 / (2 (1 + beta^2)))
  std::array<double, 4> amplitudes{};
  // -sqrt(2N(1+beta^2)); multiply by g for the quoted first-order shift.
  double first_order_energy_coefficient = 0.0;
};

PerturbativeGroundState perturbative_ground_state(std::size_t n_cavities);

// (1 - beta)^2 / (2 (1 + beta^2)). Throws for N < 2.
double perturbative_concurrence(std::size_t n_cavities);

// The state above expanded in the occupation basis of the (N, M = N) sector.
StateVector embed_perturbative_state(std::shared_ptr<const SectorBasis> basis, std::size_t i,
                                     std::size_t j);

struct PerturbationReport {
  std::size_t n_cavities = 0;
  std::size_t site_i = 0;
  std::size_t site_j = 1;
  double g_over_t = 0.0;
  bool degenerate = false;
  bool compared = false;  // false when the solver reported a level crossing

  double ground_energy = 0.0;
  double analytic_energy = 0.0;  // eps0 + eps1 using the quoted coefficient
  double energy_error = 0.0;

  double measured_slope = 0.0;  // (E0(2g) - E0(g)) / g
  double expected_slope = 0.0;
  double slope_rel_error = 0.0;

  double concurrence = 0.0;
  double analytic_concurrence = 0.0;
  double concurrence_rel_error = 0.0;
};

// Full model -> ground_state -> observables pipeline on the periodic ring
// with t = 1, delta = 2t, omega_b = 0 and couplings g = g_over_t at (i, j).
PerturbationReport validate_against_numerics(std::size_t n_cavities, double g_over_t,
                                             std::size_t i = 0, std::size_t j = 1,
                                             const LanczosOptions& options = {});

void write_report_csv(std::ostream& out, const PerturbationReport& report, bool header = true);

}  // namespace jch

#endif  // JCH_PERTURBATION_HPP

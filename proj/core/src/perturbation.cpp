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

#include "jch/perturbation.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "jch/observables.hpp"

namespace jch {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// <n_1..n_N | n>_{k=0} for the uniform orbital (1/sqrt(N)) sum_l a_l^dag
double condensate_amplitude(const std::vector<int>& photons) {
  int total = 0;
  double denom = 1.0;
  for (int n : photons) {
    total += n;
    denom *= factorial(n);
  }
  const double n_sites = static_cast<double>(photons.size());
  return std::sqrt(factorial(total) / denom) * std::pow(n_sites, -0.5 * total);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

PerturbativeGroundState perturbative_ground_state(std::size_t n_cavities) {
  if (n_cavities < 2) {
    throw std::invalid_argument("perturbative_ground_state: need at least two cavities");
  }
  PerturbativeGroundState s;
  const double n = static_cast<double>(n_cavities);
  s.n_cavities = n_cavities;
  s.beta = std::sqrt((n - 1.0) / n);
  s.eta = std::sqrt(1.0 / (2.0 * (1.0 + s.beta * s.beta)));
  s.amplitudes = {s.eta, -0.5, -0.5, s.eta * s.beta};
  s.first_order_energy_coefficient = -std::sqrt(2.0 * n * (1.0 + s.beta * s.beta));
  return s;
}

double perturbative_concurrence(std::size_t n_cavities) {
  const double beta = perturbative_ground_state(n_cavities).beta;
  return (1.0 - beta) * (1.0 - beta) / (2.0 * (1.0 + beta * beta));
}

StateVector embed_perturbative_state(std::shared_ptr<const SectorBasis> basis, std::size_t i,
                                     std::size_t j) {
  if (!basis) throw std::invalid_argument("embed_perturbative_state: null basis");
  const std::size_t n = basis->n_cavities();
  if (basis->total_excitations() != static_cast<int>(n)) {
    throw std::invalid_argument("embed_perturbative_state: basis must be the M = N sector");
  }
  if (i >= n || j >= n || i == j) {
    throw std::invalid_argument("embed_perturbative_state: need two distinct sites in range");
  }
  const PerturbativeGroundState pgs = perturbative_ground_state(n);

  Eigen::VectorXd amps = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const Configuration& c = (*basis)[k];
    bool others_ground = true;
    for (std::size_t l = 0; l < n; ++l) {
      if (l != i && l != j && c.atoms[l] != 0) others_ground = false;
    }
    if (!others_ground) continue;
    // phi1..phi4 indexed by (s_i, s_j) = (0,0), (1,0), (0,1), (1,1)
    const std::size_t which = static_cast<std::size_t>(c.atoms[i] + 2 * c.atoms[j]);
    amps(static_cast<Eigen::Index>(k)) = pgs.amplitudes[which] * condensate_amplitude(c.photons);
  }
  return StateVector{std::move(basis), std::move(amps)};
}

PerturbationReport validate_against_numerics(std::size_t n_cavities, double g_over_t,
                                             std::size_t i, std::size_t j,
                                             const LanczosOptions& options) {
  if (n_cavities < 2) throw std::invalid_argument("validate_against_numerics: need N >= 2");
  if (g_over_t < 0.0) throw std::invalid_argument("validate_against_numerics: g/t must be >= 0");

  const double t = 1.0;
  const double delta = 2.0 * t;
  const double g = g_over_t * t;
  auto basis = std::make_shared<const SectorBasis>(n_cavities, static_cast<int>(n_cavities));
  const PerturbativeGroundState pgs = perturbative_ground_state(n_cavities);

  PerturbationReport report;
  report.n_cavities = n_cavities;
  report.site_i = i;
  report.site_j = j;
  report.g_over_t = g_over_t;
  report.analytic_concurrence = perturbative_concurrence(n_cavities);
  report.expected_slope = pgs.first_order_energy_coefficient;
  // eps0 = N omega_b = 0
  report.analytic_energy = pgs.first_order_energy_coefficient * g;

  const auto h = build_hamiltonian(ModelParams::pair(n_cavities, i, j, delta, g, t), basis);
  const GroundStateResult ground = ground_state(h, options);
  report.ground_energy = ground.energy;
  report.energy_error = std::abs(ground.energy - report.analytic_energy);
  report.degenerate = ground.degenerate;
  if (ground.degenerate) return report;

  const auto h2 = build_hamiltonian(ModelParams::pair(n_cavities, i, j, delta, 2.0 * g, t), basis);
  const GroundStateResult ground2 = ground_state(h2, options);

  report.compared = true;
  report.measured_slope = (ground2.energy - ground.energy) / g;
  report.slope_rel_error =
      std::abs(report.measured_slope - report.expected_slope) / std::abs(report.expected_slope);
  report.concurrence = concurrence(ground.vector, i, j);
  report.concurrence_rel_error =
      std::abs(report.concurrence - report.analytic_concurrence) / report.analytic_concurrence;
  return report;
}

void write_report_csv(std::ostream& out, const PerturbationReport& r, bool header) {
  if (header) {
    out << "n_cavities,site_i,site_j,g_over_t,degenerate,compared,ground_energy,"
           "analytic_energy,energy_error,measured_slope,expected_slope,slope_rel_error,"
           "concurrence,analytic_concurrence,concurrence_rel_error\n";
  }
  out << r.n_cavities << ',' << r.site_i + 1 << ',' << r.site_j + 1 << ',' << fmt(r.g_over_t)
      << ',' << (r.degenerate ? 1 : 0) << ',' << (r.compared ? 1 : 0) << ','
      << fmt(r.ground_energy) << ',' << fmt(r.analytic_energy) << ',' << fmt(r.energy_error);
  if (r.compared) {
    out << ',' << fmt(r.measured_slope) << ',' << fmt(r.expected_slope) << ','
        << fmt(r.slope_rel_error) << ',' << fmt(r.concurrence) << ','
        << fmt(r.analytic_concurrence) << ',' << fmt(r.concurrence_rel_error);
  } else {
    out << ",," << fmt(r.expected_slope) << ",,," << fmt(r.analytic_concurrence) << ',';
  }
  out << '\n';
}

}  // namespace jch

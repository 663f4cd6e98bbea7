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

#ifndef JCH_OBSERVABLES_HPP
#define JCH_OBSERVABLES_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "jch/eigensolver.hpp"
#include "jch/model.hpp"

namespace jch {

// Two-atom correlators for sites (i, j):
//   z       = <S_i^+ S_j^->
//   u_plus  = P(s_i = 1, s_j = 1)    u_minus = P(s_i = 0, s_j = 0)
//   w1      = P(s_i = 0, s_j = 1)    w2      = P(s_i = 1, s_j = 0)
struct PairCorrelators {
  double z = 0.0;
  double u_plus = 0.0;
  double u_minus = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;

  // |z| - sqrt(u+ u-); concurrence switches on where this changes sign.
  double locus_value() const;
};

struct MomentumDistribution {
  std::vector<double> k_values;
  std::vector<double> weights;
};

struct Visibility {
  double value = 0.0;
  bool defined = true;  // false for the photon vacuum, where value is 0 by convention
};

struct WitnessSet {
  std::vector<double> excitation_variance;  // Delta N_i
  std::vector<double> photon_variance;      // Delta n_i
  Eigen::MatrixXd concurrence;              // C_ij, diagonal unused
  Eigen::MatrixXd locus;                    // |z_ij| - sqrt(u+ u-), diagonal unused
  Eigen::MatrixXd photon_correlation;       // <a_j^dag a_l>
  MomentumDistribution momentum;
  Visibility visibility;
  // (1/N) sum_{i<j} C_ij. The 1/N (not 1/#pairs) normalization is deliberate.
  double avg_concurrence = 0.0;
  // (1/N) sum_i Delta N_i
  double avg_excitation_variance = 0.0;
  bool degenerate = false;
};

// Standard deviation of the local excitation number n_i + s_i. A radicand
// below -1e-12 throws std::domain_error.
double excitation_variance(const StateVector& state, std::size_t site);
double photon_variance(const StateVector& state, std::size_t site);

PairCorrelators pair_correlators(const StateVector& state, std::size_t i, std::size_t j);

// rho^(ij) after tracing out photons and every other atom, in the
// (ee, eg, ge, gg) product ordering with site i first. Excitation
// conservation forces the X shape; the corner blocks are checked to be
// exactly zero.
Eigen::Matrix4d reduced_density_matrix(const StateVector& state, std::size_t i, std::size_t j);

// 2 max(0, |z| - sqrt(u+ u-))
double concurrence(const StateVector& state, std::size_t i, std::size_t j);
double concurrence(const PairCorrelators& c);

// max(0, l1 - l2 - l3 - l4) with l_k the square roots of the eigenvalues of
// rho (sy x sy) rho^* (sy x sy), descending. Requires a symmetric unit-trace
// positive semidefinite input (tolerance 1e-8).
double concurrence_wootters(const Eigen::Matrix4d& rho);

// <a_j^dag a_l>, symmetric.
Eigen::MatrixXd photon_correlation_matrix(const StateVector& state);

// periodic: V(k) = (1/N) sum_{jl} e^{ik(j-l)} <a_j^dag a_l>, k = 2 pi n / N
// open:     S(k) = 2/(N+1) sum_{ij} sin(k i) sin(k j) <a_i^dag a_j>, k = n pi / (N+1)
MomentumDistribution momentum_distribution(const Eigen::MatrixXd& corr, Boundary boundary);

Visibility visibility(const MomentumDistribution& dist);

WitnessSet witness_set(const StateVector& state, Boundary boundary, bool degenerate = false);
WitnessSet witness_set(const GroundStateResult& ground, Boundary boundary);

}  // namespace jch

#endif  // JCH_OBSERVABLES_HPP

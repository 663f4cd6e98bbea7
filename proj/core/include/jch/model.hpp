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

#ifndef JCH_MODEL_HPP
#define JCH_MODEL_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "jch/hilbert.hpp"

namespace jch {

enum class Boundary { open, periodic };

std::string_view to_string(Boundary b);
Boundary parse_boundary(std::string_view text);

// H = omega_a sum n_i + omega_b sum |e><e|_i
//   + sum_i g_i (a_i^dag |g><e|_i + h.c.)
//   - t sum_<ij> (a_i^dag a_j + h.c.)
struct ModelParams {
  double omega_a = 0.0;
  double omega_b = 0.0;
  std::vector<double> couplings;  // g_i, one per cavity
  double hopping = 0.0;
  Boundary boundary = Boundary::open;

  double detuning() const { return omega_a - omega_b; }

  // omega_b = 0, omega_a = delta, the same g on every site.
  static ModelParams uniform(std::size_t n_cavities, double delta, double g, double t,
                             Boundary boundary = Boundary::open);
  // Couplings g at sites i and j only; every other atom decoupled.
  static ModelParams pair(std::size_t n_cavities, std::size_t i, std::size_t j, double delta,
                          double g, double t, Boundary boundary = Boundary::periodic);
};

// Nearest-neighbour bonds (i, i+1). The periodic ring adds (N-1, 0) for every
// N >= 2, so a two-site ring carries its single link twice and the k = 0
// photon mode sits at omega_a - 2t for all N.
std::vector<std::pair<std::size_t, std::size_t>> hopping_bonds(std::size_t n_cavities,
                                                                Boundary boundary);

struct StateVector {
  std::shared_ptr<const SectorBasis> basis;
  Eigen::VectorXd amplitudes;

  std::size_t size() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }

  static StateVector unit(std::shared_ptr<const SectorBasis> basis, std::size_t k);
};

class SparseHamiltonian {
 public:
  using Matrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

  SparseHamiltonian(std::shared_ptr<const SectorBasis> basis, Matrix matrix);

  const std::shared_ptr<const SectorBasis>& basis() const { return basis_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  std::size_t nonzeros() const { return static_cast<std::size_t>(matrix_.nonZeros()); }

  double entry(std::size_t i, std::size_t j) const;
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix_); }

  // y = H x. x and y must not alias.
  void apply(const Eigen::Ref<const Eigen::VectorXd>& x, Eigen::Ref<Eigen::VectorXd> y) const;
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& x) const;

 private:
  std::shared_ptr<const SectorBasis> basis_;
  Matrix matrix_;
};

SparseHamiltonian build_hamiltonian(const ModelParams& params,
                                    std::shared_ptr<const SectorBasis> basis);

// Unnormalized H v. Throws std::invalid_argument if v lives on another basis.
StateVector apply(const SparseHamiltonian& h, const StateVector& v);

}  // namespace jch

#endif  // JCH_MODEL_HPP

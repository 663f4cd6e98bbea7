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

#ifndef JCH_EIGENSOLVER_HPP
#define JCH_EIGENSOLVER_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "jch/model.hpp"

namespace jch {

struct LanczosOptions {
  double tol = 1e-12;             // on ||H v - E v||
  std::size_t max_iter = 2000;    // clamped to the sector dimension
  std::uint64_t seed = 0x5eed;
  double gap_tol_rel = 1e-9;      // degenerate when E1 - E0 < gap_tol_rel * max(1, |E0|)
  bool estimate_gap = true;
};

struct GroundStateResult {
  double energy = 0.0;
  StateVector vector;
  double residual_norm = 0.0;
  std::size_t iterations = 0;
  // Lowest eigenvalue orthogonal to `vector`; +inf for a one-state sector
  // or when gap estimation is disabled.
  double first_excited = 0.0;
  double gap = 0.0;
  bool degenerate = false;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, std::size_t iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
  double residual() const { return residual_; }
  std::size_t iterations() const { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

// Lanczos with full reorthogonalization from a seeded start vector.
// The first excited level comes from a second run deflated against the
// converged ground vector, so exact degeneracies are visible.
// Throws ConvergenceError if the residual stays above tol.
GroundStateResult ground_state(const SparseHamiltonian& h, const LanczosOptions& options = {});
GroundStateResult ground_state(const SparseHamiltonian& h, double tol, std::size_t max_iter);

struct DenseSpectrum {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k belongs to values(k)
};

inline constexpr std::size_t kDenseSpectrumCap = 4096;

// Full eigendecomposition of the dense matrix. Throws std::length_error
// above `cap`.
DenseSpectrum dense_spectrum(const SparseHamiltonian& h, std::size_t cap = kDenseSpectrumCap);

// Deterministic start vector in [-1, 1)^dim (not normalized).
Eigen::VectorXd seeded_vector(std::size_t dim, std::uint64_t seed);

}  // namespace jch

#endif  // JCH_EIGENSOLVER_HPP

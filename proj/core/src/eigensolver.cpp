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

#include "jch/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace jch {
namespace {

struct LanczosOutcome {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
};

// Classical Gram-Schmidt against the basis and `deflate`, repeated once when
// the norm drops by more than 1/sqrt(2) (DGKS criterion).
void reorthogonalize(Eigen::VectorXd& w, const std::vector<Eigen::VectorXd>& basis,
                     const Eigen::VectorXd* deflate) {
  for (int pass = 0; pass < 2; ++pass) {
    const double before = w.norm();
    if (deflate) w -= deflate->dot(w) * *deflate;
    for (const auto& q : basis) w -= q.dot(w) * q;
    if (w.norm() > 0.7071067811865476 * before) break;
  }
}

// Convergence is tested every few steps; the Ritz estimate costs O(k^2).
constexpr std::size_t kCheckStride = 4;

struct TridiagonalRitz {
  double value = 0.0;
  double last_component = 0.0;
};

// Lowest eigenvalue of the Lanczos matrix and the last component of its unit
// eigenvector. Eigenvalues only, then inverse iteration on the SPD shifted
// matrix (LDL^T without pivoting), so each call is O(k^2).
TridiagonalRitz lowest_ritz(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub,
                            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& solver) {
  const Eigen::Index k = diag.size();
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const double theta = solver.eigenvalues()(0);
  if (k == 1) return {theta, 1.0};

  const double shift = theta - 1e-10 * std::max(1.0, std::abs(theta));
  Eigen::VectorXd x = Eigen::VectorXd::Ones(k);
  Eigen::VectorXd d(k);
  Eigen::VectorXd l(k - 1);
  d(0) = diag(0) - shift;
  for (Eigen::Index i = 1; i < k; ++i) {
    l(i - 1) = sub(i - 1) / d(i - 1);
    d(i) = diag(i) - shift - l(i - 1) * sub(i - 1);
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index i = 1; i < k; ++i) x(i) -= l(i - 1) * x(i - 1);
    for (Eigen::Index i = 0; i < k; ++i) x(i) /= d(i);
    for (Eigen::Index i = k - 2; i >= 0; --i) x(i) -= l(i) * x(i + 1);
    x.normalize();
  }
  return {theta, x(k - 1)};
}

// Lowest eigenpair of H restricted to the complement of `deflate`.
LanczosOutcome lanczos_lowest(const SparseHamiltonian& h, Eigen::VectorXd start,
                              const Eigen::VectorXd* deflate, double tol,
                              std::size_t max_iter) {
  const std::size_t dim = h.dim();
  const std::size_t krylov_cap = std::min(max_iter, dim - (deflate ? 1 : 0));

  reorthogonalize(start, {}, deflate);
  double start_norm = start.norm();
  if (start_norm == 0.0) {
    // seeded vector happened to be parallel to the deflation vector
    start = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dim));
    reorthogonalize(start, {}, deflate);
    start_norm = start.norm();
  }

  std::vector<Eigen::VectorXd> q;
  q.reserve(krylov_cap);
  q.push_back(start / start_norm);
  std::vector<double> alpha;
  std::vector<double> beta;

  LanczosOutcome out;
  Eigen::VectorXd w(static_cast<Eigen::Index>(dim));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;

  for (std::size_t j = 0; j < krylov_cap; ++j) {
    h.apply(q[j], w);
    if (deflate) w -= deflate->dot(w) * *deflate;
    alpha.push_back(q[j].dot(w));
    w -= alpha.back() * q[j];
    if (j > 0) w -= beta.back() * q[j - 1];
    reorthogonalize(w, q, deflate);
    const double b = w.norm();

    const double scale_hint = std::max(1.0, std::abs(alpha.front()));
    const bool breakdown = b <= 1e-13 * scale_hint;
    if ((j + 1) % kCheckStride != 0 && j + 1 != krylov_cap && !breakdown) {
      beta.push_back(b);
      q.push_back(w / b);
      continue;
    }

    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), k);
    Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), k - 1))
                                : Eigen::VectorXd();
    const TridiagonalRitz ritz = lowest_ritz(diag, sub, tri);
    const double estimate = std::abs(b * ritz.last_component);

    const double scale = std::max(1.0, std::abs(ritz.value));
    const bool exhausted = (j + 1 == krylov_cap) || breakdown || b <= 1e-13 * scale;
    if (estimate < 0.1 * tol || exhausted) {
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const Eigen::VectorXd s = tri.eigenvectors().col(0);
      Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
      for (Eigen::Index c = 0; c < k; ++c) x += s(c) * q[static_cast<std::size_t>(c)];
      if (deflate) x -= deflate->dot(x) * *deflate;
      x.normalize();
      Eigen::VectorXd hx = h.apply(x);
      if (deflate) hx -= deflate->dot(hx) * *deflate;
      const double rayleigh = x.dot(hx);
      const double residual = (hx - rayleigh * x).norm();
      out = LanczosOutcome{rayleigh, std::move(x), residual, j + 1};
      if (residual < tol || exhausted) return out;
    }
    beta.push_back(b);
    q.push_back(w / b);
  }
  return out;
}

}  // namespace

Eigen::VectorXd seeded_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // top 53 bits -> [0, 1); avoids distribution implementation differences
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v(i) = 2.0 * unit - 1.0;
  }
  return v;
}

GroundStateResult ground_state(const SparseHamiltonian& h, const LanczosOptions& options) {
  const std::size_t dim = h.dim();
  if (dim == 0) throw std::invalid_argument("ground_state: empty sector");
  if (!(options.tol > 0.0)) throw std::invalid_argument("ground_state: tol must be positive");
  if (options.max_iter == 0) throw std::invalid_argument("ground_state: max_iter must be positive");

  GroundStateResult result;
  LanczosOutcome ground =
      lanczos_lowest(h, seeded_vector(dim, options.seed), nullptr, options.tol, options.max_iter);

  // residual recomputed on the undeflated operator
  const Eigen::VectorXd hv = h.apply(ground.vector);
  const double residual = (hv - ground.value * ground.vector).norm();
  if (!(residual < options.tol)) {
    throw ConvergenceError("ground_state: residual " + std::to_string(residual) +
                               " above tolerance after " + std::to_string(ground.iterations) +
                               " iterations",
                           residual, ground.iterations);
  }

  result.energy = ground.value;
  result.residual_norm = residual;
  result.iterations = ground.iterations;
  result.first_excited = std::numeric_limits<double>::infinity();

  if (options.estimate_gap && dim > 1) {
    const LanczosOutcome excited =
        lanczos_lowest(h, seeded_vector(dim, options.seed + 1), &ground.vector, options.tol,
                       options.max_iter);
    result.first_excited = excited.value;
  }
  result.gap = result.first_excited - result.energy;
  result.degenerate = result.gap < options.gap_tol_rel * std::max(1.0, std::abs(result.energy));
  result.vector = StateVector{h.basis(), std::move(ground.vector)};
  return result;
}

GroundStateResult ground_state(const SparseHamiltonian& h, double tol, std::size_t max_iter) {
  LanczosOptions options;
  options.tol = tol;
  options.max_iter = max_iter;
  return ground_state(h, options);
}

DenseSpectrum dense_spectrum(const SparseHamiltonian& h, std::size_t cap) {
  if (h.dim() > cap) {
    throw std::length_error("dense_spectrum: dimension " + std::to_string(h.dim()) +
                            " exceeds cap " + std::to_string(cap));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.dense());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense_spectrum: eigendecomposition failed");
  }
  return DenseSpectrum{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace jch

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

#include "jch/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jch {

std::string_view to_string(Boundary b) {
  return b == Boundary::open ? "open" : "periodic";
}

Boundary parse_boundary(std::string_view text) {
  if (text == "open") return Boundary::open;
  if (text == "periodic") return Boundary::periodic;
  throw std::invalid_argument("unknown boundary '" + std::string(text) +
                              "' (expected open|periodic)");
}

ModelParams ModelParams::uniform(std::size_t n_cavities, double delta, double g, double t,
                                 Boundary boundary) {
  return ModelParams{delta, 0.0, std::vector<double>(n_cavities, g), t, boundary};
}

ModelParams ModelParams::pair(std::size_t n_cavities, std::size_t i, std::size_t j,
                              double delta, double g, double t, Boundary boundary) {
  if (i >= n_cavities || j >= n_cavities || i == j) {
    throw std::invalid_argument("ModelParams::pair: need two distinct sites in range");
  }
  ModelParams params{delta, 0.0, std::vector<double>(n_cavities, 0.0), t, boundary};
  params.couplings[i] = g;
  params.couplings[j] = g;
  return params;
}

std::vector<std::pair<std::size_t, std::size_t>> hopping_bonds(std::size_t n_cavities,
                                                                Boundary boundary) {
  std::vector<std::pair<std::size_t, std::size_t>> bonds;
  for (std::size_t i = 0; i + 1 < n_cavities; ++i) bonds.emplace_back(i, i + 1);
  if (boundary == Boundary::periodic && n_cavities >= 2) {
    bonds.emplace_back(n_cavities - 1, 0);
  }
  return bonds;
}

StateVector StateVector::unit(std::shared_ptr<const SectorBasis> basis, std::size_t k) {
  Eigen::VectorXd amps = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
  amps(static_cast<Eigen::Index>(k)) = 1.0;
  return StateVector{std::move(basis), std::move(amps)};
}

SparseHamiltonian::SparseHamiltonian(std::shared_ptr<const SectorBasis> basis, Matrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  matrix_.makeCompressed();
}

double SparseHamiltonian::entry(std::size_t i, std::size_t j) const {
  return matrix_.coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
}

void SparseHamiltonian::apply(const Eigen::Ref<const Eigen::VectorXd>& x,
                              Eigen::Ref<Eigen::VectorXd> y) const {
  y.noalias() = matrix_ * x;
}

Eigen::VectorXd SparseHamiltonian::apply(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  Eigen::VectorXd y(x.size());
  apply(x, y);
  return y;
}

SparseHamiltonian build_hamiltonian(const ModelParams& params,
                                    std::shared_ptr<const SectorBasis> basis) {
  if (!basis) throw std::invalid_argument("build_hamiltonian: null basis");
  const std::size_t n = basis->n_cavities();
  if (params.couplings.size() != n) {
    throw std::invalid_argument("build_hamiltonian: " + std::to_string(params.couplings.size()) +
                                " couplings for " + std::to_string(n) + " cavities");
  }

  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> triplets;
  const auto bonds = hopping_bonds(n, params.boundary);
  triplets.reserve(basis->size() * (1 + 2 * n + 2 * bonds.size()));

  auto index_of = [&](const Configuration& c) {
    auto idx = basis->lookup(c);
    if (!idx) throw std::logic_error("build_hamiltonian: move left the excitation sector");
    return static_cast<Eigen::Index>(*idx);
  };
  auto add_pair = [&](Eigen::Index a, Eigen::Index b, double value) {
    triplets.emplace_back(a, b, value);
    triplets.emplace_back(b, a, value);
  };

  for (std::size_t k = 0; k < basis->size(); ++k) {
    const Configuration& c = (*basis)[k];
    const auto row = static_cast<Eigen::Index>(k);

    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += params.omega_a * c.photons[i] + params.omega_b * c.atoms[i];
    }
    triplets.emplace_back(row, row, diag);

    // |.. n_i, e_i ..> -> |.. n_i + 1, g_i ..>
    for (std::size_t i = 0; i < n; ++i) {
      if (c.atoms[i] != 1 || params.couplings[i] == 0.0) continue;
      Configuration target = c;
      target.atoms[i] = 0;
      target.photons[i] += 1;
      add_pair(index_of(target), row, params.couplings[i] * std::sqrt(c.photons[i] + 1.0));
    }

    // one photon moved from `from` to `to` for each listed bond
    if (params.hopping != 0.0) {
      for (const auto& [from, to] : bonds) {
        if (c.photons[from] == 0) continue;
        Configuration target = c;
        target.photons[from] -= 1;
        target.photons[to] += 1;
        const double amp = std::sqrt(static_cast<double>(c.photons[from]) * (c.photons[to] + 1));
        add_pair(index_of(target), row, -params.hopping * amp);
      }
    }
  }

  const auto dim = static_cast<Eigen::Index>(basis->size());
  SparseHamiltonian::Matrix matrix(dim, dim);
  matrix.setFromTriplets(triplets.begin(), triplets.end());
  return SparseHamiltonian(std::move(basis), std::move(matrix));
}

StateVector apply(const SparseHamiltonian& h, const StateVector& v) {
  if (!v.basis || !same_sector(*v.basis, *h.basis())) {
    throw std::invalid_argument("apply: state vector and Hamiltonian use different bases");
  }
  if (v.size() != h.dim()) {
    throw std::invalid_argument("apply: state vector length does not match Hamiltonian");
  }
  return StateVector{h.basis(), h.apply(v.amplitudes)};
}

}  // namespace jch

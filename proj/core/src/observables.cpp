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

#include "jch/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace jch {
namespace {

constexpr double kNegativeClamp = 1e-12;

void check_state(const StateVector& state) {
  if (!state.basis) throw std::invalid_argument("observable: state has no basis");
  if (state.size() != state.basis->size()) {
    throw std::invalid_argument("observable: amplitude count does not match basis");
  }
}

void check_site(const StateVector& state, std::size_t site) {
  if (site >= state.basis->n_cavities()) {
    throw std::out_of_range("observable: site " + std::to_string(site) + " out of range for " +
                            std::to_string(state.basis->n_cavities()) + " cavities");
  }
}

void check_pair(const StateVector& state, std::size_t i, std::size_t j) {
  check_state(state);
  check_site(state, i);
  check_site(state, j);
  if (i == j) throw std::invalid_argument("observable: pair needs two distinct sites");
}

double clamped_sqrt(double radicand, const char* what) {
  if (radicand < -kNegativeClamp) {
    throw std::domain_error(std::string(what) + ": negative variance " +
                            std::to_string(radicand) + " (state not normalized?)");
  }
  return std::sqrt(std::max(0.0, radicand));
}

template <typename Local>
double local_deviation(const StateVector& state, std::size_t site, Local value,
                       const char* what) {
  check_state(state);
  check_site(state, site);
  double mean = 0.0;
  double second = 0.0;
  const SectorBasis& basis = *state.basis;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double p = state.amplitudes(static_cast<Eigen::Index>(k)) *
                     state.amplitudes(static_cast<Eigen::Index>(k));
    const double v = value(basis[k], site);
    mean += p * v;
    second += p * v * v;
  }
  return clamped_sqrt(second - mean * mean, what);
}

double amp(const StateVector& s, std::size_t k) {
  return s.amplitudes(static_cast<Eigen::Index>(k));
}

}  // namespace

double PairCorrelators::locus_value() const {
  return std::abs(z) - std::sqrt(u_plus * u_minus);
}

double excitation_variance(const StateVector& state, std::size_t site) {
  return local_deviation(
      state, site,
      [](const Configuration& c, std::size_t i) { return double(c.excitations_at(i)); },
      "excitation_variance");
}

double photon_variance(const StateVector& state, std::size_t site) {
  return local_deviation(
      state, site, [](const Configuration& c, std::size_t i) { return double(c.photons[i]); },
      "photon_variance");
}

PairCorrelators pair_correlators(const StateVector& state, std::size_t i, std::size_t j) {
  check_pair(state, i, j);
  const SectorBasis& basis = *state.basis;
  PairCorrelators out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Configuration& c = basis[k];
    const double a = amp(state, k);
    const double p = a * a;
    const int si = c.atoms[i];
    const int sj = c.atoms[j];
    if (si == 1 && sj == 1) {
      out.u_plus += p;
    } else if (si == 0 && sj == 0) {
      out.u_minus += p;
    } else if (si == 0) {
      out.w1 += p;
      // S_i^+ S_j^- |k> = |k with s_i = 1, s_j = 0>
      Configuration partner = c;
      partner.atoms[i] = 1;
      partner.atoms[j] = 0;
      if (auto idx = basis.lookup(partner)) out.z += amp(state, *idx) * a;
    } else {
      out.w2 += p;
    }
  }
  return out;
}

Eigen::Matrix4d reduced_density_matrix(const StateVector& state, std::size_t i, std::size_t j) {
  check_pair(state, i, j);
  const SectorBasis& basis = *state.basis;
  // slot of (s_i, s_j) in (ee, eg, ge, gg)
  auto slot = [](int si, int sj) { return 2 * (1 - si) + (1 - sj); };

  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Configuration& c = basis[k];
    const double a = amp(state, k);
    if (a == 0.0) continue;
    const int col = slot(c.atoms[i], c.atoms[j]);
    for (int si = 0; si <= 1; ++si) {
      for (int sj = 0; sj <= 1; ++sj) {
        Configuration bra = c;
        bra.atoms[i] = si;
        bra.atoms[j] = sj;
        if (auto idx = basis.lookup(bra)) rho(slot(si, sj), col) += amp(state, *idx) * a;
      }
    }
  }

  // slot excitation counts (2, 1, 1, 0); coherences between different counts vanish
  constexpr std::array<int, 4> count = {2, 1, 1, 0};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (count[r] != count[c] && rho(r, c) != 0.0) {
        throw std::logic_error("reduced_density_matrix: excitation-changing coherence");
      }
    }
  }
  return rho;
}

double concurrence(const PairCorrelators& c) {
  return 2.0 * std::max(0.0, c.locus_value());
}

double concurrence(const StateVector& state, std::size_t i, std::size_t j) {
  return concurrence(pair_correlators(state, i, j));
}

double concurrence_wootters(const Eigen::Matrix4d& rho) {
  constexpr double tol = 1e-8;
  if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("concurrence_wootters: rho is not symmetric");
  }
  if (std::abs(rho.trace() - 1.0) > tol) {
    throw std::invalid_argument("concurrence_wootters: trace " + std::to_string(rho.trace()) +
                                " != 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> rho_eig(rho);
  if (rho_eig.eigenvalues().minCoeff() < -tol) {
    throw std::invalid_argument("concurrence_wootters: rho is not positive semidefinite");
  }

  // sigma_y x sigma_y is real: anti-diagonal (-1, 1, 1, -1)
  Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  // rho is real, so rho^* == rho
  const Eigen::Matrix4d rho_tilde = flip * rho * flip;

  // eig(rho rho~) == eig(sqrt(rho) rho~ sqrt(rho)), the latter symmetric PSD
  const Eigen::Vector4d root_vals = rho_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4d root =
      rho_eig.eigenvectors() * root_vals.asDiagonal() * rho_eig.eigenvectors().transpose();
  const Eigen::Matrix4d product = root * rho_tilde * root;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> r_eig(0.5 * (product + product.transpose()),
                                                       Eigen::EigenvaluesOnly);
  Eigen::Vector4d lambda = r_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
  return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

Eigen::MatrixXd photon_correlation_matrix(const StateVector& state) {
  check_state(state);
  const SectorBasis& basis = *state.basis;
  const auto n = static_cast<Eigen::Index>(basis.n_cavities());
  Eigen::MatrixXd corr = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Configuration& c = basis[k];
    const double a = amp(state, k);
    if (a == 0.0) continue;
    for (Eigen::Index l = 0; l < n; ++l) {
      const int nl = c.photons[static_cast<std::size_t>(l)];
      if (nl == 0) continue;
      corr(l, l) += a * a * nl;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == l) continue;
        // a_j^dag a_l |k>
        Configuration moved = c;
        moved.photons[static_cast<std::size_t>(l)] -= 1;
        moved.photons[static_cast<std::size_t>(j)] += 1;
        if (auto idx = basis.lookup(moved)) {
          corr(j, l) += amp(state, *idx) * a *
                        std::sqrt(double(nl) * (c.photons[static_cast<std::size_t>(j)] + 1));
        }
      }
    }
  }
  return 0.5 * (corr + corr.transpose());
}

MomentumDistribution momentum_distribution(const Eigen::MatrixXd& corr, Boundary boundary) {
  const Eigen::Index n = corr.rows();
  if (corr.cols() != n) throw std::invalid_argument("momentum_distribution: matrix not square");
  if (n > 0 && (corr - corr.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("momentum_distribution: correlation matrix not symmetric");
  }
  MomentumDistribution dist;
  dist.k_values.reserve(static_cast<std::size_t>(n));
  dist.weights.reserve(static_cast<std::size_t>(n));
  const double pi = std::numbers::pi;

  for (Eigen::Index m = 0; m < n; ++m) {
    double k = 0.0;
    double w = 0.0;
    if (boundary == Boundary::periodic) {
      k = 2.0 * pi * double(m) / double(n);
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) w += std::cos(k * double(j - l)) * corr(j, l);
      w /= double(n);
    } else {
      k = double(m + 1) * pi / double(n + 1);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          w += std::sin(k * double(i + 1)) * std::sin(k * double(j + 1)) * corr(i, j);
      w *= 2.0 / double(n + 1);
    }
    if (w < 0.0) {
      if (w < -kNegativeClamp) {
        throw std::domain_error("momentum_distribution: negative weight " + std::to_string(w) +
                                " (correlation matrix not positive semidefinite)");
      }
      w = 0.0;
    }
    dist.k_values.push_back(k);
    dist.weights.push_back(w);
  }
  return dist;
}

Visibility visibility(const MomentumDistribution& dist) {
  if (dist.weights.empty()) return {0.0, false};
  const auto [lo, hi] = std::minmax_element(dist.weights.begin(), dist.weights.end());
  const double denom = *hi + *lo;
  if (denom < 1e-12) return {0.0, false};
  return {(*hi - *lo) / denom, true};
}

WitnessSet witness_set(const StateVector& state, Boundary boundary, bool degenerate) {
  check_state(state);
  const std::size_t n = state.basis->n_cavities();
  const auto ni = static_cast<Eigen::Index>(n);
  WitnessSet out;
  out.degenerate = degenerate;
  out.excitation_variance.reserve(n);
  out.photon_variance.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.excitation_variance.push_back(excitation_variance(state, i));
    out.photon_variance.push_back(photon_variance(state, i));
  }

  out.concurrence = Eigen::MatrixXd::Zero(ni, ni);
  out.locus = Eigen::MatrixXd::Zero(ni, ni);
  double pair_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairCorrelators c = pair_correlators(state, i, j);
      const auto a = static_cast<Eigen::Index>(i);
      const auto b = static_cast<Eigen::Index>(j);
      out.locus(a, b) = out.locus(b, a) = c.locus_value();
      out.concurrence(a, b) = out.concurrence(b, a) = concurrence(c);
      pair_sum += out.concurrence(a, b);
    }
  }
  out.avg_concurrence = pair_sum / double(n);

  double var_sum = 0.0;
  for (double v : out.excitation_variance) var_sum += v;
  out.avg_excitation_variance = var_sum / double(n);

  out.photon_correlation = photon_correlation_matrix(state);
  out.momentum = momentum_distribution(out.photon_correlation, boundary);
  out.visibility = visibility(out.momentum);
  return out;
}

WitnessSet witness_set(const GroundStateResult& ground, Boundary boundary) {
  return witness_set(ground.vector, boundary, ground.degenerate);
}

}  // namespace jch

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

#include "jch/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jch {
namespace {

constexpr std::size_t kNoOffset = std::numeric_limits<std::size_t>::max();

std::atomic<std::uint64_t> g_constructions{0};

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

// Number of ways to place `total` photons into `parts` cavities.
std::size_t compositions(int total, std::size_t parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(static_cast<std::size_t>(total) + parts - 1, parts - 1);
}

// Appends every composition of `total` into photons[pos..] in lex order.
void emit_compositions(std::vector<int>& photons, std::size_t pos, int total,
                       const std::vector<int>& atoms,
                       std::vector<Configuration>& out) {
  const std::size_t n = photons.size();
  if (pos + 1 == n) {
    photons[pos] = total;
    out.push_back(Configuration{photons, atoms});
    return;
  }
  for (int v = 0; v <= total; ++v) {
    photons[pos] = v;
    emit_compositions(photons, pos + 1, total - v, atoms, out);
  }
}

}  // namespace

int Configuration::excitations() const {
  return std::accumulate(photons.begin(), photons.end(), 0) +
         std::accumulate(atoms.begin(), atoms.end(), 0);
}

SectorBasis::SectorBasis(std::size_t n_cavities, int total_excitations)
    : n_cavities_(n_cavities), total_excitations_(total_excitations) {
  if (n_cavities == 0) {
    throw std::invalid_argument("SectorBasis: n_cavities must be positive");
  }
  if (total_excitations < 0) {
    throw std::invalid_argument("SectorBasis: total_excitations must be non-negative");
  }
  if (n_cavities >= 8 * sizeof(std::size_t) - 1) {
    throw std::invalid_argument("SectorBasis: too many cavities for atom-pattern indexing");
  }
  ++g_constructions;

  configurations_.reserve(sector_dimension(n_cavities, total_excitations));
  const std::size_t n_patterns = std::size_t{1} << n_cavities;
  pattern_offset_.assign(n_patterns, kNoOffset);

  std::vector<int> atoms(n_cavities, 0);
  std::vector<int> photons(n_cavities, 0);
  for (std::size_t pattern = 0; pattern < n_patterns; ++pattern) {
    int excited = 0;
    for (std::size_t j = 0; j < n_cavities; ++j) {
      atoms[j] = static_cast<int>((pattern >> (n_cavities - 1 - j)) & 1U);
      excited += atoms[j];
    }
    if (excited > total_excitations) continue;
    pattern_offset_[pattern] = configurations_.size();
    emit_compositions(photons, 0, total_excitations - excited, atoms, configurations_);
  }
}

std::size_t SectorBasis::rank_photons(const std::vector<int>& photons,
                                      int photon_total) const {
  std::size_t rank = 0;
  int remaining = photon_total;
  for (std::size_t pos = 0; pos + 1 < n_cavities_; ++pos) {
    const std::size_t parts_after = n_cavities_ - pos - 1;
    for (int v = 0; v < photons[pos]; ++v) {
      rank += compositions(remaining - v, parts_after);
    }
    remaining -= photons[pos];
  }
  return rank;
}

std::optional<std::size_t> SectorBasis::lookup(const Configuration& config) const {
  if (config.photons.size() != n_cavities_ || config.atoms.size() != n_cavities_) {
    throw std::invalid_argument("lookup: configuration length " +
                                std::to_string(config.photons.size()) + "/" +
                                std::to_string(config.atoms.size()) +
                                " does not match basis with " +
                                std::to_string(n_cavities_) + " cavities");
  }
  std::size_t pattern = 0;
  int excited = 0;
  int photon_total = 0;
  for (std::size_t j = 0; j < n_cavities_; ++j) {
    const int s = config.atoms[j];
    const int n = config.photons[j];
    if ((s != 0 && s != 1) || n < 0) return std::nullopt;
    pattern = (pattern << 1) | static_cast<std::size_t>(s);
    excited += s;
    photon_total += n;
  }
  if (excited + photon_total != total_excitations_) return std::nullopt;
  return pattern_offset_[pattern] + rank_photons(config.photons, photon_total);
}

SectorBasis enumerate_basis(std::size_t n_cavities, int total_excitations) {
  return SectorBasis(n_cavities, total_excitations);
}

std::size_t sector_dimension(std::size_t n_cavities, int total_excitations) {
  if (n_cavities == 0) {
    throw std::invalid_argument("sector_dimension: n_cavities must be positive");
  }
  if (total_excitations < 0) return 0;
  const auto m = static_cast<std::size_t>(total_excitations);
  std::size_t total = 0;
  for (std::size_t k = 0; k <= std::min(n_cavities, m); ++k) {
    total += binomial(n_cavities, k) * binomial(m - k + n_cavities - 1, n_cavities - 1);
  }
  return total;
}

std::optional<std::size_t> lookup(const SectorBasis& basis, const Configuration& config) {
  return basis.lookup(config);
}

std::uint64_t basis_constructions() { return g_constructions.load(); }

}  // namespace jch

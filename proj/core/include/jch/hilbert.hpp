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

#ifndef JCH_HILBERT_HPP
#define JCH_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace jch {

// One occupation-basis state of N cavities, each with one two-level atom.
// atoms[j] is 0 for |g> and 1 for |e>; photons[j] is the Fock number n_j.
struct Configuration {
  std::vector<int> photons;
  std::vector<int> atoms;

  int excitations() const;
  int excitations_at(std::size_t site) const { return photons[site] + atoms[site]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// All configurations with sum_j (n_j + s_j) == M, in atoms-major
// lexicographic order over (s_1..s_N, n_1..n_N).
//
// Within a fixed-M sector n_j <= M, so the sector is exact and needs no
// photon cutoff. Immutable after construction.
class SectorBasis {
 public:
  SectorBasis(std::size_t n_cavities, int total_excitations);

  std::size_t n_cavities() const { return n_cavities_; }
  int total_excitations() const { return total_excitations_; }
  std::size_t size() const { return configurations_.size(); }

  const Configuration& operator[](std::size_t i) const { return configurations_[i]; }
  const std::vector<Configuration>& configurations() const { return configurations_; }

  // Dense index of `config`, or nullopt if it lies outside the sector.
  // Throws std::invalid_argument when the config has the wrong length.
  std::optional<std::size_t> lookup(const Configuration& config) const;

  auto begin() const { return configurations_.begin(); }
  auto end() const { return configurations_.end(); }

 private:
  std::size_t rank_photons(const std::vector<int>& photons, int photon_total) const;

  std::size_t n_cavities_;
  int total_excitations_;
  std::vector<Configuration> configurations_;
  // offset of the first configuration of each atom pattern, indexed by the
  // pattern read as a binary number with s_1 most significant; npos when the
  // pattern holds more than M excitations.
  std::vector<std::size_t> pattern_offset_;
};

SectorBasis enumerate_basis(std::size_t n_cavities, int total_excitations);

// sum_{k=0}^{min(N,M)} C(N,k) C(M-k+N-1, N-1), without enumerating.
std::size_t sector_dimension(std::size_t n_cavities, int total_excitations);

std::optional<std::size_t> lookup(const SectorBasis& basis, const Configuration& config);

// Bases from the same (N, M) share one canonical ordering.
inline bool same_sector(const SectorBasis& a, const SectorBasis& b) {
  return &a == &b ||
         (a.n_cavities() == b.n_cavities() && a.total_excitations() == b.total_excitations());
}

// Number of SectorBasis objects constructed by this process.
std::uint64_t basis_constructions();

}  // namespace jch

#endif  // JCH_HILBERT_HPP

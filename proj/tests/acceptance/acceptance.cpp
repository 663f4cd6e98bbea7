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

// Acceptance checks. `jch_acceptance <criterion>` runs one check,
// `jch_acceptance` runs all of them; each prints one [PASS]/[FAIL] line.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jch/perturbation.hpp"
#include "jch/sweep.hpp"
#include "oracle.hpp"

namespace {

using namespace jch;

constexpr double kLimitTol = 1e-10;
constexpr double kDegenerateGap = 1e-9;
constexpr double kPerturbativeGOverT = 1e-3;
constexpr double kPerturbativeRelTol = 1e-2;
constexpr double kEnergyTol = 1e-10;
constexpr double kOverlapTol = 1e-8;
constexpr double kCrossOracleTol = 1e-10;
constexpr double kHermiticityTol = 1e-12;
constexpr double kProbabilityTol = 1e-12;
constexpr double kSumRuleTol = 1e-10;
constexpr double kReflectionTol = 1e-10;
constexpr double kLowThreshold = 0.1;
constexpr double kHighThreshold = 0.5;
constexpr std::size_t kLocusWindow = 2;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Collects the first failure message; later ones only count.
struct Checker {
  bool pass = true;
  int failures = 0;
  std::string first;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) first = what;
    pass = false;
    ++failures;
  }
  Outcome done(const std::string& summary) const {
    if (pass) return {true, summary};
    return {false, first + (failures > 1 ? fmt(" (+%d more)", failures - 1) : "")};
  }
};

std::shared_ptr<const SectorBasis> sector(std::size_t n, int m) {
  return std::make_shared<const SectorBasis>(n, m);
}

GroundStateResult solve(const ModelParams& p, std::shared_ptr<const SectorBasis> basis) {
  return ground_state(build_hamiltonian(p, std::move(basis)));
}

std::string csv_of(const SweepResult& r) {
  std::ostringstream out;
  write_csv(out, r);
  return out.str();
}

Outcome mott_limit() {
  Checker c;
  double worst = 0.0;
  for (std::size_t n : {2u, 4u}) {
    for (Boundary b : {Boundary::open, Boundary::periodic}) {
      const GroundStateResult g = solve(ModelParams::uniform(n, 3.0, 0.0, 1.0, b), sector(n, int(n)));
      const WitnessSet w = witness_set(g, b);
      const std::string where = fmt("N=%zu %s", n, std::string(to_string(b)).c_str());
      worst = std::max({worst, w.avg_excitation_variance, w.visibility.value, w.avg_concurrence});
      c.require(!g.degenerate, where + ": unexpected degeneracy");
      c.require(w.avg_excitation_variance < kLimitTol,
                fmt("%s: mean dN = %.3g", where.c_str(), w.avg_excitation_variance));
      c.require(std::abs(w.visibility.value) < kLimitTol,
                fmt("%s: V = %.3g", where.c_str(), w.visibility.value));
      c.require(!w.visibility.defined, where + ": photon vacuum expected");
      c.require(w.avg_concurrence < kLimitTol,
                fmt("%s: mean C = %.3g", where.c_str(), w.avg_concurrence));
    }
  }
  return c.done(fmt("N in {2,4}, both boundaries: max |dN|,|V|,|C| = %.2g", worst));
}

Outcome superfluid_limit() {
  Checker c;
  std::string values;
  for (std::size_t n : {2u, 4u}) {
    const GroundStateResult g =
        solve(ModelParams::uniform(n, 1.0, 0.0, 1.0, Boundary::periodic), sector(n, int(n)));
    const WitnessSet w = witness_set(g, Boundary::periodic);
    const double expected = std::sqrt(double(n - 1) / double(n));
    c.require(!g.degenerate, fmt("N=%zu: unexpected degeneracy", n));
    for (std::size_t i = 0; i < n; ++i) {
      c.require(std::abs(w.excitation_variance[i] - expected) < kLimitTol,
                fmt("N=%zu site %zu: dN = %.12g, expected %.12g", n, i + 1,
                    w.excitation_variance[i], expected));
    }
    c.require(std::abs(w.visibility.value - 1.0) < kLimitTol,
              fmt("N=%zu: V = %.12g", n, w.visibility.value));
    c.require(w.avg_concurrence < kLimitTol, fmt("N=%zu: mean C = %.3g", n, w.avg_concurrence));
    values += fmt(" N=%zu dN=%.7f", n, w.excitation_variance[0]);
  }
  return c.done("periodic ring," + values + ", V=1, C=0");
}

Outcome degenerate_line() {
  Checker c;
  std::string gaps;
  for (std::size_t n : {2u, 4u}) {
    SweepConfig config;
    config.n_cavities = n;
    config.boundary = Boundary::periodic;
    config.absolute = true;
    config.g = 0.0;
    config.delta_over_g = {2.0, 2.0, 1};
    config.t_over_g = {1.0, 1.0, 1};
    const SweepResult r = run_sweep(config);
    const SweepRecord& rec = r.records[0];
    c.require(rec.status == PointStatus::ok, fmt("N=%zu: solver failure", n));
    c.require(rec.degenerate && rec.gap < kDegenerateGap,
              fmt("N=%zu: gap %.3g not flagged", n, rec.gap));
    c.require(std::abs(rec.ground_energy) < kLimitTol,
              fmt("N=%zu: E0 = %.3g, expected N omega_b = 0", n, rec.ground_energy));

    std::istringstream in(csv_of(r));
    std::string line, header, row;
    std::getline(in, line);
    std::getline(in, header);
    std::getline(in, row);
    std::vector<std::string> names, cells;
    for (std::istringstream h(header); std::getline(h, line, ',');) names.push_back(line);
    for (std::istringstream v(row + ","); std::getline(v, line, ',');) cells.push_back(line);
    c.require(names.size() == cells.size(), fmt("N=%zu: ragged CSV row", n));
    for (std::size_t k = 0; k < names.size() && k < cells.size(); ++k) {
      const bool concurrence_column =
          names[k] == "avg_concurrence" || names[k].rfind("locus_", 0) == 0;
      if (concurrence_column) {
        c.require(cells[k].empty(), fmt("N=%zu: column %s = '%s'", n, names[k].c_str(),
                                        cells[k].c_str()));
      }
    }
    gaps += fmt(" N=%zu gap=%.1e", n, rec.gap);
  }
  return c.done("delta=2t, g=0:" + gaps + "; concurrence cells empty");
}

Outcome perturbative_concurrence_check() {
  Checker c;
  std::string detail;
  for (std::size_t n : {2u, 4u}) {
    const PerturbationReport r = validate_against_numerics(n, kPerturbativeGOverT);
    c.require(r.compared, fmt("N=%zu: comparison skipped (degenerate)", n));
    c.require(r.concurrence_rel_error < kPerturbativeRelTol,
              fmt("N=%zu: C = %.7g vs %.7g, rel err %.2e", n, r.concurrence,
                  r.analytic_concurrence, r.concurrence_rel_error));
    detail += fmt(" N=%zu C=%.7f target=%.7f rel=%.1e;", n, r.concurrence,
                  r.analytic_concurrence, r.concurrence_rel_error);
  }
  return c.done(fmt("g/t=%.0e:", kPerturbativeGOverT) + detail);
}

Outcome perturbative_energy_slope() {
  Checker c;
  std::string detail;
  for (std::size_t n : {2u, 4u}) {
    const PerturbationReport r = validate_against_numerics(n, kPerturbativeGOverT);
    c.require(r.compared, fmt("N=%zu: comparison skipped (degenerate)", n));
    c.require(r.slope_rel_error < kPerturbativeRelTol,
              fmt("N=%zu: measured slope %.6f vs expected %.6f (rel err %.3f; ratio %.6f)", n,
                  r.measured_slope, r.expected_slope, r.slope_rel_error,
                  r.expected_slope / r.measured_slope));
    detail += fmt(" N=%zu slope=%.6f expected=%.6f;", n, r.measured_slope, r.expected_slope);
  }
  return c.done(fmt("g/t=%.0e:", kPerturbativeGOverT) + detail);
}

Outcome perturbative_monotone() {
  Checker c;
  std::string detail;
  for (std::size_t n : {2u, 4u}) {
    double previous = std::numeric_limits<double>::infinity();
    detail += fmt(" N=%zu:", n);
    for (double x : {1e-2, 1e-3, 1e-4}) {
      const PerturbationReport r = validate_against_numerics(n, x);
      c.require(r.compared, fmt("N=%zu g/t=%.0e: comparison skipped", n, x));
      c.require(r.concurrence_rel_error < previous,
                fmt("N=%zu g/t=%.0e: error %.3e did not decrease from %.3e", n, x,
                    r.concurrence_rel_error, previous));
      previous = r.concurrence_rel_error;
      detail += fmt(" %.1e", r.concurrence_rel_error);
    }
  }
  return c.done("concurrence rel err over g/t = 1e-2, 1e-3, 1e-4 ->" + detail);
}

Outcome eigensolver_oracle() {
  Checker c;
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> delta(-4.0, 4.0);
  std::uniform_real_distribution<double> hop(0.0, 2.0);
  double worst_energy = 0.0, worst_overlap = 0.0;
  int compared = 0, skipped = 0;
  for (auto [n, points] : {std::pair<std::size_t, int>{2, 200}, {4, 50}}) {
    auto basis = sector(n, int(n));
    for (int k = 0; k < points; ++k) {
      const double d = delta(rng), t = hop(rng);
      const auto h = build_hamiltonian(ModelParams::uniform(n, d, 1.0, t), basis);
      const GroundStateResult g = ground_state(h);
      const DenseSpectrum dense = dense_spectrum(h);
      const double de = std::abs(g.energy - dense.values(0));
      worst_energy = std::max(worst_energy, de);
      c.require(de < kEnergyTol,
                fmt("N=%zu (%.4f, %.4f): |E_L - E_D| = %.2e", n, d, t, de));
      const double gap = dense.values(1) - dense.values(0);
      if (gap < kDegenerateGap * std::max(1.0, std::abs(dense.values(0)))) {
        ++skipped;
        continue;
      }
      const double miss = 1.0 - std::abs(g.vector.amplitudes.dot(dense.vectors.col(0)));
      worst_overlap = std::max(worst_overlap, miss);
      c.require(miss < kOverlapTol, fmt("N=%zu (%.4f, %.4f): 1 - overlap = %.2e", n, d, t, miss));
      ++compared;
    }
  }
  return c.done(fmt("250 points (%d overlap-compared, %d degenerate): max dE=%.1e, "
                    "max 1-overlap=%.1e",
                    compared, skipped, worst_energy, worst_overlap));
}

Outcome concurrence_cross_oracle() {
  Checker c;
  std::mt19937_64 rng(777);
  const std::vector<std::shared_ptr<const SectorBasis>> sectors = {sector(2, 2), sector(3, 2),
                                                                   sector(3, 3), sector(4, 4)};
  double worst = 0.0;
  int entangled = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto& basis = sectors[std::size_t(k) % sectors.size()];
    const StateVector v{basis, oracle::random_unit_vector(basis->size(), rng)};
    const std::size_t n = basis->n_cavities();
    const std::size_t i = std::size_t(k) % n;
    const std::size_t j = (i + 1 + std::size_t(k / 4) % (n - 1)) % n;
    const double closed = concurrence(v, i, j);
    const double reference = concurrence_wootters(oracle::sector_partial_trace(v, i, j));
    const double diff = std::abs(closed - reference);
    worst = std::max(worst, diff);
    entangled += closed > 0.0;
    c.require(diff < kCrossOracleTol,
              fmt("vector %d (N=%zu, pair %zu,%zu): %.12g vs %.12g", k, n, i + 1, j + 1, closed,
                  reference));
  }
  return c.done(fmt("1000 vectors, %d with C>0: max |diff| = %.1e", entangled, worst));
}

Outcome structural_invariants() {
  Checker c;
  std::mt19937_64 rng(31337);

  c.require(sector_dimension(2, 2) == 8 && SectorBasis(2, 2).size() == 8, "dim(2,2) != 8");
  c.require(sector_dimension(4, 4) == 192 && SectorBasis(4, 4).size() == 192, "dim(4,4) != 192");

  double herm = 0.0;
  for (Boundary b : {Boundary::open, Boundary::periodic}) {
    auto basis = sector(4, 4);
    const auto h = build_hamiltonian(ModelParams::uniform(4, -1.3, 1.0, 0.7, b), basis);
    for (int k = 0; k < 20; ++k) {
      const Eigen::VectorXd x = oracle::random_unit_vector(basis->size(), rng);
      const Eigen::VectorXd y = oracle::random_unit_vector(basis->size(), rng);
      herm = std::max(herm, std::abs(x.dot(h.apply(y)) - h.apply(x).dot(y)));
    }
  }
  c.require(herm < kHermiticityTol, fmt("<x,Hy> - <Hx,y> = %.2e", herm));

  double prob = 0.0, sum_rule = 0.0;
  bool corners = true;
  for (int k = 0; k < 50; ++k) {
    auto basis = sector(k % 2 ? 4 : 3, k % 2 ? 4 : 3);
    const StateVector v{basis, oracle::random_unit_vector(basis->size(), rng)};
    const PairCorrelators p = pair_correlators(v, 0, 2);
    prob = std::max(prob, std::abs(p.u_plus + p.u_minus + p.w1 + p.w2 - 1.0));
    const Eigen::Matrix4d rho = reduced_density_matrix(v, 0, 2);
    corners = corners && rho(0, 1) == 0.0 && rho(0, 2) == 0.0 && rho(0, 3) == 0.0 &&
              rho(1, 3) == 0.0 && rho(2, 3) == 0.0 && rho(1, 0) == 0.0 && rho(2, 0) == 0.0 &&
              rho(3, 0) == 0.0 && rho(3, 1) == 0.0 && rho(3, 2) == 0.0;
    const Eigen::MatrixXd corr = photon_correlation_matrix(v);
    double total = 0.0;
    for (double s : momentum_distribution(corr, Boundary::open).weights) total += s;
    sum_rule = std::max(sum_rule, std::abs(total - corr.trace()));
  }
  c.require(prob < kProbabilityTol, fmt("u+ + u- + w1 + w2 - 1 = %.2e", prob));
  c.require(sum_rule < kSumRuleTol, fmt("sum_k S(k) - tr = %.2e", sum_rule));
  c.require(corners, "X-form corner entries not exactly zero");

  double reflection = 0.0;
  for (std::size_t n : {3u, 4u}) {
    for (auto [d, t] : {std::pair{-1.0, 0.4}, {0.5, 0.2}, {2.0, 1.5}}) {
      const GroundStateResult g =
          solve(ModelParams::uniform(n, d, 1.0, t, Boundary::open), sector(n, int(n)));
      const WitnessSet w = witness_set(g, Boundary::open);
      for (std::size_t i = 0; i < n; ++i) {
        reflection = std::max(reflection, std::abs(w.excitation_variance[i] -
                                                   w.excitation_variance[n - 1 - i]));
        for (std::size_t j = i + 1; j < n; ++j) {
          reflection = std::max(
              reflection, std::abs(w.concurrence(Eigen::Index(i), Eigen::Index(j)) -
                                   w.concurrence(Eigen::Index(n - 1 - j), Eigen::Index(n - 1 - i))));
        }
      }
    }
  }
  c.require(reflection < kReflectionTol, fmt("reflection asymmetry %.2e", reflection));

  return c.done(fmt("dims 8/192; hermiticity %.1e; probability %.1e; sum rule %.1e; corners "
                    "exact; reflection %.1e",
                    herm, prob, sum_rule, reflection));
}

Outcome locus_witness_transition() {
  Checker c;
  const SweepConfig config;  // 2 cavities, open chain, default grid
  const SweepResult r = run_sweep(config);
  c.require(r.failures() == 0, fmt("%zu solver failures", r.failures()));
  const LocusGrid grid = locus_grid(r, 0, 1);
  const auto locus = locate_locus(grid);
  c.require(!locus.empty(), "locus polyline is empty");

  const std::size_t nd = r.delta_steps;
  int cuts = 0, good = 0;
  double closest_v = 1.0, closest_dn = 1.0;
  for (std::size_t ti = 0; ti < r.t_steps; ++ti) {
    for (std::size_t di = 0; di + 1 < nd; ++di) {
      const double a = grid.values[ti * nd + di];
      const double b = grid.values[ti * nd + di + 1];
      if (std::isnan(a) || std::isnan(b) || (a < 0.0) == (b < 0.0)) continue;
      ++cuts;
      const std::size_t lo = di >= kLocusWindow ? di - kLocusWindow : 0;
      const std::size_t hi = std::min(nd - 1, di + 1 + kLocusWindow);
      double v_min = 1e300, v_max = -1e300, n_min = 1e300, n_max = -1e300;
      for (std::size_t k = lo; k <= hi; ++k) {
        const SweepRecord& rec = r.at(ti, k);
        v_min = std::min(v_min, rec.visibility);
        v_max = std::max(v_max, rec.visibility);
        n_min = std::min(n_min, rec.avg_excitation_variance);
        n_max = std::max(n_max, rec.avg_excitation_variance);
      }
      const bool ok = v_min < kLowThreshold && v_max > kHighThreshold &&
                      n_min < kLowThreshold && n_max > kHighThreshold;
      good += ok;
      closest_v = std::min(closest_v, v_min);
      closest_dn = std::min(closest_dn, n_min);
      c.require(ok, fmt("t/g=%.2f, locus at delta/g~%.2f: within +/-%zu cells V in [%.3f, %.3f], "
                        "mean dN in [%.3f, %.3f]",
                        r.at(ti, di).t_over_g, r.at(ti, di).delta_over_g, kLocusWindow, v_min,
                        v_max, n_min, n_max));
    }
  }
  c.require(cuts > 0, "no fixed-t cut crosses the locus");
  return c.done(fmt("%zu locus points; %d/%d cuts show the %.1f -> %.1f transition", locus.size(),
                    good, cuts, kLowThreshold, kHighThreshold));
}

Outcome determinism() {
  Checker c;
  std::string detail;
  for (std::size_t n : {2u, 3u}) {
    SweepConfig config;
    config.n_cavities = n;
    if (n == 3) {
      config.delta_over_g = {-4.0, 4.0, 17};
      config.t_over_g = {0.0, 2.0, 9};
    }
    config.workers = 1;
    const std::string serial = csv_of(run_sweep(config));
    config.workers = 4;
    const std::string parallel = csv_of(run_sweep(config));
    c.require(serial == parallel, fmt("N=%zu: CSV differs between 1 and 4 workers", n));
    detail += fmt(" N=%zu %zu bytes;", n, serial.size());
  }
  return c.done("byte-identical CSV for 1 vs 4 workers:" + detail);
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"mott_limit", mott_limit},
      {"superfluid_limit", superfluid_limit},
      {"degenerate_line", degenerate_line},
      {"perturbative_concurrence", perturbative_concurrence_check},
      {"perturbative_energy_slope", perturbative_energy_slope},
      {"perturbative_monotone", perturbative_monotone},
      {"eigensolver_oracle", eigensolver_oracle},
      {"concurrence_cross_oracle", concurrence_cross_oracle},
      {"structural_invariants", structural_invariants},
      {"locus_witness_transition", locus_witness_transition},
      {"determinism", determinism},
  };
  return all;
}

bool run(const std::string& name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool ok = true;
  if (argc < 2) {
    for (const auto& [name, check] : criteria()) ok = run(name, check) && ok;
    return ok ? 0 : 1;
  }
  for (int a = 1; a < argc; ++a) {
    const std::string wanted = argv[a];
    bool found = false;
    for (const auto& [name, check] : criteria()) {
      if (name != wanted) continue;
      found = true;
      ok = run(name, check) && ok;
    }
    if (!found) {
      std::fprintf(stderr, "unknown criterion '%s'\n", wanted.c_str());
      return 2;
    }
  }
  return ok ? 0 : 1;
}

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

#include "jch/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace jch {
namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

const char* status_name(PointStatus s) {
  return s == PointStatus::ok ? "ok" : "solver_failure";
}

}  // namespace

double AxisRange::value(std::size_t k) const {
  if (steps <= 1) return min;
  if (k + 1 == steps) return max;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

std::vector<double> AxisRange::values() const {
  std::vector<double> out(steps);
  for (std::size_t k = 0; k < steps; ++k) out[k] = value(k);
  return out;
}

AxisRange AxisRange::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw std::invalid_argument("axis range '" + std::string(text) + "' is not MIN:MAX:STEPS");
  }
  AxisRange r{parse_double(text.substr(0, first), "axis min"),
              parse_double(text.substr(first + 1, second - first - 1), "axis max"),
              parse_size(text.substr(second + 1), "axis steps")};
  if (r.steps < 1) throw std::invalid_argument("axis range needs at least one step");
  if (r.min > r.max) throw std::invalid_argument("axis range has min > max");
  return r;
}

CouplingPattern CouplingPattern::parse(std::string_view text) {
  if (text == "uniform") return {};
  constexpr std::string_view prefix = "pair=";
  if (text.substr(0, prefix.size()) != prefix) {
    throw std::invalid_argument("coupling '" + std::string(text) + "' is not uniform|pair=I,J");
  }
  const auto rest = text.substr(prefix.size());
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("coupling '" + std::string(text) + "' is not pair=I,J");
  }
  const std::size_t i = parse_size(rest.substr(0, comma), "pair site");
  const std::size_t j = parse_size(rest.substr(comma + 1), "pair site");
  if (i == 0 || j == 0 || i == j) {
    throw std::invalid_argument("coupling pair needs two distinct one-based sites");
  }
  return CouplingPattern{true, i - 1, j - 1};
}

std::string CouplingPattern::to_string() const {
  if (!pair) return "uniform";
  return "pair=" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

void SweepConfig::validate() const {
  if (n_cavities == 0) throw std::invalid_argument("sweep: need at least one cavity");
  if (excitations() < 0) throw std::invalid_argument("sweep: excitations must be >= 0");
  for (const AxisRange* axis : {&delta_over_g, &t_over_g}) {
    if (axis->steps < 1 || axis->min > axis->max) {
      throw std::invalid_argument("sweep: invalid axis range");
    }
  }
  if (coupling.pair && (coupling.i >= n_cavities || coupling.j >= n_cavities)) {
    throw std::invalid_argument("sweep: coupling pair outside the chain");
  }
  if (workers == 0) throw std::invalid_argument("sweep: workers must be >= 1");
  if (absolute && g < 0.0) throw std::invalid_argument("sweep: g must be >= 0");
}

std::size_t SweepResult::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.status != PointStatus::ok;
  }));
}

std::size_t pair_slot(std::size_t i, std::size_t j, std::size_t n_cavities) {
  if (i > j) std::swap(i, j);
  if (i == j || j >= n_cavities) throw std::out_of_range("pair_slot: invalid pair");
  // pairs before row i: (N-1) + (N-2) + ... + (N-i)
  return i * n_cavities - i * (i + 1) / 2 + (j - i - 1);
}

ModelParams point_params(const SweepConfig& config, double delta_axis, double t_axis) {
  const double g = config.coupling_strength();
  // in scaled mode g = 1, so axis values are already energies
  const double delta = delta_axis * (config.absolute ? 1.0 : g);
  const double t = t_axis * (config.absolute ? 1.0 : g);
  if (config.coupling.pair) {
    return ModelParams::pair(config.n_cavities, config.coupling.i, config.coupling.j, delta, g, t,
                             config.boundary);
  }
  return ModelParams::uniform(config.n_cavities, delta, g, t, config.boundary);
}

SweepRecord solve_point(const SweepConfig& config, std::shared_ptr<const SectorBasis> basis,
                        double delta_axis, double t_axis) {
  SweepRecord rec;
  rec.delta_over_g = delta_axis;
  rec.t_over_g = t_axis;
  try {
    const auto h = build_hamiltonian(point_params(config, delta_axis, t_axis), std::move(basis));
    const GroundStateResult ground = ground_state(h, config.solver);
    const WitnessSet w = witness_set(ground, config.boundary);

    rec.ground_energy = ground.energy;
    rec.degenerate = ground.degenerate;
    rec.gap = ground.gap;
    rec.avg_concurrence = w.avg_concurrence;
    rec.visibility = w.visibility.value;
    rec.visibility_defined = w.visibility.defined;
    rec.avg_excitation_variance = w.avg_excitation_variance;
    rec.excitation_variance = w.excitation_variance;
    const std::size_t n = config.n_cavities;
    rec.locus.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        rec.locus.push_back(w.locus(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
    }
  } catch (const ConvergenceError& e) {
    rec.status = PointStatus::solver_failure;
    rec.message = e.what();
  }
  return rec;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  auto basis = std::make_shared<const SectorBasis>(config.n_cavities, config.excitations());

  SweepResult result;
  result.n_cavities = config.n_cavities;
  result.delta_steps = config.delta_over_g.steps;
  result.t_steps = config.t_over_g.steps;
  result.absolute = config.absolute;
  result.g = config.coupling_strength();
  const std::size_t total = result.delta_steps * result.t_steps;
  result.records.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      const std::size_t ti = idx / result.delta_steps;
      const std::size_t di = idx % result.delta_steps;
      result.records[idx] =
          solve_point(config, basis, config.delta_over_g.value(di), config.t_over_g.value(ti));
    }
  };
  {
    const std::size_t n_workers = std::min(config.workers, std::max<std::size_t>(total, 1));
    std::vector<std::jthread> pool;
    pool.reserve(n_workers > 0 ? n_workers - 1 : 0);
    for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
  }

  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + config.output_path);
    write_csv(out, result);
    if (!out) throw std::runtime_error("failed writing " + config.output_path);
  }
  return result;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  const std::size_t n = result.n_cavities;
  if (result.absolute) {
    out << "schema=1,units=absolute,g=" << num(result.g) << '\n';
    out << "delta,t";
  } else {
    out << "schema=1\n";
    out << "delta_over_g,t_over_g";
  }
  out << ",status,ground_energy,degenerate,gap,avg_concurrence,visibility,visibility_defined,"
         "avg_excitation_variance";
  for (std::size_t i = 0; i < n; ++i) out << ",dN_" << i + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out << ",locus_" << i + 1 << '_' << j + 1;
  out << '\n';

  const std::size_t n_pairs = n * (n - 1) / 2;
  for (const SweepRecord& r : result.records) {
    out << num(r.delta_over_g) << ',' << num(r.t_over_g) << ',' << status_name(r.status);
    if (r.status != PointStatus::ok) {
      out << std::string(7 + n + n_pairs, ',') << '\n';
      continue;
    }
    out << ',' << num(r.ground_energy) << ',' << (r.degenerate ? 1 : 0) << ',' << num(r.gap)
        << ',';
    if (!r.degenerate) out << num(r.avg_concurrence);
    out << ',' << num(r.visibility) << ',' << (r.visibility_defined ? 1 : 0) << ','
        << num(r.avg_excitation_variance);
    for (double v : r.excitation_variance) out << ',' << num(v);
    for (double v : r.locus) {
      out << ',';
      if (!r.degenerate) out << num(v);
    }
    out << '\n';
  }
}

LocusGrid locus_grid(const SweepResult& result, std::size_t i, std::size_t j) {
  const std::size_t slot = pair_slot(i, j, result.n_cavities);
  LocusGrid grid;
  grid.delta_values.resize(result.delta_steps);
  grid.t_values.resize(result.t_steps);
  grid.values.resize(result.records.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t ti = 0; ti < result.t_steps; ++ti) {
    for (std::size_t di = 0; di < result.delta_steps; ++di) {
      const SweepRecord& r = result.at(ti, di);
      grid.delta_values[di] = r.delta_over_g;
      grid.t_values[ti] = r.t_over_g;
      if (r.status == PointStatus::ok && !r.degenerate) {
        grid.values[ti * result.delta_steps + di] = r.locus[slot];
      }
    }
  }
  return grid;
}

std::vector<LocusPoint> locate_locus(const LocusGrid& grid) {
  const std::size_t nd = grid.delta_values.size();
  const std::size_t nt = grid.t_values.size();
  if (grid.values.size() != nd * nt) {
    throw std::invalid_argument("locate_locus: grid is not rectangular");
  }
  auto value = [&](std::size_t ti, std::size_t di) { return grid.values[ti * nd + di]; };
  // zero counts as positive, so a node exactly on the locus yields one point
  auto crosses = [](double a, double b) {
    return !std::isnan(a) && !std::isnan(b) && ((a < 0.0) != (b < 0.0));
  };
  auto fraction = [](double a, double b) { return a / (a - b); };

  std::vector<LocusPoint> points;
  for (std::size_t ti = 0; ti < nt; ++ti) {
    for (std::size_t di = 0; di + 1 < nd; ++di) {
      const double a = value(ti, di);
      const double b = value(ti, di + 1);
      if (!crosses(a, b)) continue;
      const double x = grid.delta_values[di] +
                       fraction(a, b) * (grid.delta_values[di + 1] - grid.delta_values[di]);
      points.push_back({x, grid.t_values[ti]});
    }
  }
  for (std::size_t di = 0; di < nd; ++di) {
    for (std::size_t ti = 0; ti + 1 < nt; ++ti) {
      const double a = value(ti, di);
      const double b = value(ti + 1, di);
      if (!crosses(a, b)) continue;
      const double y =
          grid.t_values[ti] + fraction(a, b) * (grid.t_values[ti + 1] - grid.t_values[ti]);
      points.push_back({grid.delta_values[di], y});
    }
  }
  std::sort(points.begin(), points.end(), [](const LocusPoint& p, const LocusPoint& q) {
    return p.t_over_g != q.t_over_g ? p.t_over_g < q.t_over_g : p.delta_over_g < q.delta_over_g;
  });
  return points;
}

std::vector<LocusPoint> locate_locus(const SweepResult& result, std::size_t i, std::size_t j) {
  return locate_locus(locus_grid(result, i, j));
}

}  // namespace jch

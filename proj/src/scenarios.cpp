// Copyright 2026 The ergoswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergoswitch/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "ergoswitch/errors.hpp"
#include "ergoswitch/parallel.hpp"

namespace ergoswitch {

namespace {

void require_qubit(const ComplexMatrix& rho, const char* where) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw NotQubit(std::string(where) + ": expected a 2x2 state");
  }
}

void require_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterOutOfRange(std::string(name) + " must lie in [0, 1], got " +
                              std::to_string(value));
  }
}

void require_beta(double beta, const char* name) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ParameterOutOfRange(std::string(name) + " must be finite and >= 0");
  }
}

}  // namespace

ComplexMatrix qubit_state(double delta_rho, double coherence, double phase) {
  if (!(delta_rho >= -1.0 && delta_rho <= 1.0)) {
    throw ParameterOutOfRange("delta_rho must lie in [-1, 1]");
  }
  ComplexMatrix rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 - delta_rho);
  rho(1, 1) = 0.5 * (1.0 + delta_rho);
  rho(0, 1) = std::polar(coherence, phase);
  rho(1, 0) = std::conj(rho(0, 1));
  require_density_matrix(rho);
  return rho;
}

ComplexMatrix maximally_coherent_qubit(double delta_rho, double phase) {
  const double r11 = 0.5 * (1.0 - delta_rho);
  const double r22 = 0.5 * (1.0 + delta_rho);
  return qubit_state(delta_rho, std::sqrt(std::max(0.0, r11 * r22)), phase);
}

DepolQubitOracle depol_qubit_oracle(const ComplexMatrix& rho) {
  require_qubit(rho, "depol_qubit_oracle");
  const double delta = (rho(1, 1) - rho(0, 0)).real();
  const double radius = std::sqrt(delta * delta + 4.0 * std::norm(rho(0, 1)));
  DepolQubitOracle out;
  out.wd_i = std::abs(delta) / 8.0;
  out.wd_c = (radius - std::abs(delta)) / 8.0;
  out.wd = radius / 8.0;
  return out;
}

DepolDdimOracle depol_ddim_oracle(const ComplexMatrix& rho, const Hamiltonian& h) {
  const ComplexMatrix local = h.to_energy_basis(rho);
  const int d = static_cast<int>(local.rows());
  const RealVector& eps = h.energies();

  auto spread = [&](std::vector<double> x) {
    std::sort(x.begin(), x.end());
    double sum = 0.0;
    for (int k = 0; k < d; ++k) sum += eps[k] * (x[k] - x[d - 1 - k]);
    return sum / (2.0 * d * d);
  };

  std::vector<double> populations(d);
  for (int k = 0; k < d; ++k) populations[k] = local(k, k).real();
  const RealVector r = hermitian_eigenvalues(hermitian_part(local));

  DepolDdimOracle out;
  out.wd_i = spread(populations);
  out.wd = spread(std::vector<double>(r.data(), r.data() + d));
  return out;
}

double thermal_gain_bracket(double beta, double delta_rho) {
  require_beta(beta, "beta");
  const double e2 = std::exp(-2.0 * beta);
  const double edge = (1.0 - e2) / (1.0 + e2);
  if (delta_rho > 3.0 * edge) return (1.0 + e2) * delta_rho - 3.0 * (1.0 - e2);
  if (delta_rho < -edge) return -(1.0 + e2) * delta_rho - (1.0 - e2);
  return 0.0;
}

ThermalOracle thermal_oracle(double beta, const ComplexMatrix& rho) {
  require_qubit(rho, "thermal_oracle");
  const double e1 = std::exp(-beta);
  const double z = 1.0 + e1;
  const double delta = (rho(1, 1) - rho(0, 0)).real();

  ComplexMatrix gibbs_part = ComplexMatrix::Zero(2, 2);
  gibbs_part(0, 0) = 1.0;
  gibbs_part(1, 1) = e1;
  ComplexMatrix cross(2, 2);
  cross(0, 0) = rho(0, 0);
  cross(0, 1) = e1 * rho(0, 1);
  cross(1, 0) = e1 * rho(1, 0);
  cross(1, 1) = e1 * e1 * rho(1, 1);

  ThermalOracle out;
  out.wd_i = thermal_gain_bracket(beta, delta) / (4.0 * z * z);
  out.weighted_plus = (gibbs_part + cross / z) / (2.0 * z);
  out.weighted_minus = (gibbs_part - cross / z) / (2.0 * z);
  return out;
}

double thermal_input_gain(double beta, double beta_in) {
  require_beta(beta, "beta");
  require_beta(beta_in, "beta_in");
  const double e1 = std::exp(-beta);
  const double ein = std::exp(-beta_in);
  return std::max(0.0, (std::exp(-2.0 * beta) - ein) /
                           (2.0 * (1.0 + e1) * (1.0 + e1) * (1.0 + ein)));
}

bool thermal_activation_threshold(double beta, double beta_in) {
  require_beta(beta, "beta");
  require_beta(beta_in, "beta_in");
  return beta_in > 2.0 * beta;
}

void AdpfParams::validate() const {
  require_unit(gamma, "gamma");
  require_unit(p, "p");
  require_unit(q, "q");
}

std::pair<KrausChannel, KrausChannel> adpf_channels(const AdpfParams& params) {
  params.validate();
  return {gad(params.p, params.gamma), phase_flip(params.q)};
}

GainWindow gain_window(const AdpfParams& params) {
  params.validate();
  GainWindow w;
  w.gain_possible = params.gamma * (1.0 - params.q) > 0.0;
  if (!w.gain_possible) {
    w.x_minus = 1.0;
    w.x_plus = 1.0;
    return w;
  }
  const double bias = std::abs(1.0 - 2.0 * params.p);
  const double g = params.gamma * (1.0 + params.q);
  const double inner = g * bias / (2.0 - g);
  if (params.p < 0.5) {
    w.x_plus = bias;
    w.x_minus = inner;
  } else {
    w.x_plus = inner;
    w.x_minus = bias;
  }
  return w;
}

AdpfSpecialPoints adpf_special_points(const AdpfParams& params) {
  params.validate();
  AdpfSpecialPoints s;
  s.trivial = 1.0 - 2.0 * params.p;
  const double g = params.gamma * (3.0 + params.q);
  s.coherence_match_defined = 4.0 - g > 0.0;
  s.coherence_match =
      s.coherence_match_defined ? g * (2.0 * params.p - 1.0) / (4.0 - g) : 0.0;
  return s;
}

AdpfOracle adpf_oracle(const AdpfParams& params, const ComplexMatrix& rho) {
  require_qubit(rho, "adpf_oracle");
  params.validate();
  const double delta = (rho(1, 1) - rho(0, 0)).real();
  AdpfOracle out;
  out.delta_rho_class =
      params.gamma * (1.0 - 2.0 * params.p) + (1.0 - params.gamma) * delta;
  out.zeta = out.delta_rho_class +
             params.gamma * (1.0 - params.q) * (delta - (1.0 - 2.0 * params.p));
  out.window = gain_window(params);
  out.dW_i = 0.5 * std::max(0.0, std::abs(out.zeta) - std::abs(out.delta_rho_class));
  out.special_points = adpf_special_points(params);
  return out;
}

std::vector<double> sweep_grid(int points, const std::vector<double>& extra) {
  if (points < 3) throw ParameterOutOfRange("sweep needs at least 3 points");
  std::vector<double> grid;
  grid.reserve(points + extra.size());
  for (int k = 0; k < points; ++k) {
    grid.push_back(k == points - 1 ? 1.0 : -1.0 + 2.0 * k / (points - 1));
  }
  for (double x : extra) {
    if (x >= -1.0 && x <= 1.0) grid.push_back(x);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double l, double r) { return std::abs(l - r) < 1e-12; }),
             grid.end());
  return grid;
}

std::vector<SweepRecord> adpf_sweep(const AdpfParams& params,
                                    const SweepOptions& options) {
  const auto [a, b] = adpf_channels(params);
  std::vector<double> extra;
  if (options.inject_special_points) {
    const GainWindow w = gain_window(params);
    const AdpfSpecialPoints s = adpf_special_points(params);
    if (w.gain_possible) extra.insert(extra.end(), {-w.x_minus, w.x_plus});
    extra.push_back(s.trivial);
    if (s.coherence_match_defined) extra.push_back(s.coherence_match);
  }
  const std::vector<double> grid = sweep_grid(options.points, extra);
  const Hamiltonian h = Hamiltonian::qubit();

  std::vector<SweepRecord> records(grid.size());
  OptimizerOptions inner = options.optimizer;
  inner.parallel_grid = false;
  parallel_for(grid.size(), [&](std::size_t k) {
    const DaemonicEvaluator evaluator(a, b, maximally_coherent_qubit(grid[k]),
                                      options.control, h);
    SweepRecord& rec = records[k];
    rec.delta_rho = grid[k];
    rec.report = options.optimize ? optimize_measurement(evaluator, inner).report
                                  : evaluator.evaluate(options.measure);
    rec.dW = rec.report.gain.total;
    rec.dW_i = rec.report.gain.incoherent;
    rec.dW_c = rec.report.gain.coherent;
  });
  return records;
}

}  // namespace ergoswitch

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

#pragma once

#include <utility>
#include <vector>

#include "ergoswitch/channels.hpp"
#include "ergoswitch/ergotropy.hpp"
#include "ergoswitch/optimizer.hpp"

namespace ergoswitch {

// Qubit states in the energy basis of H = diag(0, 1).

/// ρ₁₁ = (1 − δρ)/2, ρ₂₂ = (1 + δρ)/2, ρ₁₂ = c·e^{iθ}
ComplexMatrix qubit_state(double delta_rho, double coherence, double phase = 0.0);

/// Pure state with ρ₁₂ = √(ρ₁₁ρ₂₂)·e^{iθ}.
ComplexMatrix maximally_coherent_qubit(double delta_rho, double phase = 0.0);

// Depolarizing pair, control and measurement (½, 0).

struct DepolQubitOracle {
  double wd_i = 0.0;
  double wd_c = 0.0;
  double wd = 0.0;
};

DepolQubitOracle depol_qubit_oracle(const ComplexMatrix& rho);

struct DepolDdimOracle {
  double wd_i = 0.0;
  double wd = 0.0;
};

/// (1/2d²) Σ_k ε_k (x↑_k − x↓_k) with x the populations (W_i) or the
/// eigenvalues (W) of ρ, and ε ascending.
DepolDdimOracle depol_ddim_oracle(const ComplexMatrix& rho, const Hamiltonian& h);

// Thermalizing pair on a qubit, control and measurement (½, 0).

/// Piecewise bracket in δρ without the conditional-state normalization.
double thermal_gain_bracket(double beta, double delta_rho);

struct ThermalOracle {
  double wd_i = 0.0;
  ComplexMatrix weighted_plus;   ///< p₊ρ₊
  ComplexMatrix weighted_minus;  ///< p₋ρ₋
};

/// W^D_i = bracket / (4(1 + e^{−β})²).
ThermalOracle thermal_oracle(double beta, const ComplexMatrix& rho);

/// Gain for a thermal input at β_in.
double thermal_input_gain(double beta, double beta_in);

/// True iff the thermal input is activated, i.e. β_in > 2β.
bool thermal_activation_threshold(double beta, double beta_in);

// Generalized amplitude damping followed by phase flip.

struct AdpfParams {
  double gamma = 0.5;
  double p = 1.0 / 3.0;
  double q = 0.0;

  /// Throws ParameterOutOfRange.
  void validate() const;
};

std::pair<KrausChannel, KrausChannel> adpf_channels(const AdpfParams& params);

struct GainWindow {
  double x_minus = 0.0;
  double x_plus = 0.0;
  /// false when γ(1 − q) = 0: no incoherent gain for any δρ
  bool gain_possible = true;

  bool contains(double delta_rho) const {
    return !gain_possible || (delta_rho >= -x_minus && delta_rho <= x_plus);
  }
};

GainWindow gain_window(const AdpfParams& params);

struct AdpfSpecialPoints {
  double trivial = 0.0;          ///< δρ = 1 − 2p, zero total gain
  double coherence_match = 0.0;  ///< zero coherent gain for maximal coherence
  bool coherence_match_defined = true;
};

AdpfSpecialPoints adpf_special_points(const AdpfParams& params);

struct AdpfOracle {
  double delta_rho_class = 0.0;
  double zeta = 0.0;
  GainWindow window;
  double dW_i = 0.0;  ///< ½ max{0, |ζ| − |δρ_class|}
  AdpfSpecialPoints special_points;
};

AdpfOracle adpf_oracle(const AdpfParams& params, const ComplexMatrix& rho);

// Sweeps.

struct SweepRecord {
  double delta_rho = 0.0;
  double dW = 0.0;
  double dW_i = 0.0;
  double dW_c = 0.0;
  DaemonicReport report;
};

struct SweepOptions {
  int points = 401;
  bool optimize = false;
  MeasureSpec measure{0.5, 0.0};
  ControlSpec control{0.5, 0.0};
  /// Adds the window edges and special points to the uniform grid.
  bool inject_special_points = true;
  OptimizerOptions optimizer;
};

/// Inclusive δρ grid over [−1, 1] with optional extra points, sorted and
/// deduplicated.
std::vector<double> sweep_grid(int points, const std::vector<double>& extra);

/// Maximally coherent inputs swept over δρ through the generic pipeline.
std::vector<SweepRecord> adpf_sweep(const AdpfParams& params,
                                    const SweepOptions& options = {});

}  // namespace ergoswitch

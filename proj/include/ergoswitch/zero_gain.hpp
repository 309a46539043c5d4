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

#include <string>

#include "ergoswitch/ergotropy.hpp"

namespace ergoswitch {

enum class ZeroGainRegime {
  Generic,                ///< non-degenerate classical output
  DegenerateHamiltonian,  ///< H ∝ 𝟙
  DegenerateClassical,    ///< classical output ∝ 𝟙
  Indeterminate,          ///< some, but not all, classical eigenvalues coincide
};

std::string to_string(ZeroGainRegime regime);

struct ZeroGainCheck {
  bool predicted_zero = false;
  bool indeterminate = false;
  ZeroGainRegime regime = ZeroGainRegime::Generic;
  /// max |[Ĝ, ρ_class]|
  double commutator_residual = 0.0;
  /// max_k (2|G_kk − G_{k+1,k+1}| − (r_k − r_{k+1})), ≤ 0 when ordering holds
  double ordering_residual = 0.0;
  /// max_k |G_kk − G_{k+1,k+1}|, used when the classical output is ∝ 𝟙
  double degeneracy_residual = 0.0;
  /// smallest gap between consecutive classical eigenvalues
  double min_gap = 0.0;
};

struct ZeroGainTolerances {
  double commutator = 1e-9;
  double ordering = 1e-10;
  double gap = 1e-8;
};

/// Predicts whether measuring the control in basis m yields no daemonic gain:
/// both conditional states must commute with the classical output and keep
/// its population ordering in its eigenbasis.
ZeroGainCheck zero_gain_check(const KrausChannel& a, const KrausChannel& b,
                              const ComplexMatrix& rho, const ControlSpec& control,
                              const MeasureSpec& measure, const Hamiltonian& h,
                              const ZeroGainTolerances& tol = {});

}  // namespace ergoswitch

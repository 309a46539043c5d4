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

// Closed-form qubit expressions for H = diag(0, 1). Energies are in units of
// ε₂ with ε₁ = 0, and the computational basis is the energy basis.

#include "ergoswitch/channels.hpp"
#include "ergoswitch/ergotropy.hpp"
#include "ergoswitch/quantum_switch.hpp"

namespace ergoswitch::qubit {

/// δρ = ρ₂₂ − ρ₁₁
double population_imbalance(const ComplexMatrix& rho);

/// W_i = max{0, δρ}, W_c = (η − √(η² − 4|ρ₁₂|²))/2 with η = √(2 Tr ρ² − 1).
WorkSplit split_closed_form(const ComplexMatrix& rho);

/// Scalars entering the qubit gain formulas for one (control, measurement).
struct GainTerms {
  double phi = 0.5;
  double delta_ab = 0.0;     ///< imbalance of (A∘B)[ρ]
  double delta_ba = 0.0;     ///< imbalance of (B∘A)[ρ]
  double delta_class = 0.0;  ///< φ δ_AB + (1−φ) δ_BA
  Complex zeta;              ///< χ₂₂ − χ₁₁
  double delta_g = 0.0;      ///< Ĝ₂₂ − Ĝ₁₁
  Complex g12;               ///< Ĝ₁₂
  Complex class12;           ///< (ρ_class)₁₂
};

GainTerms gain_terms(const KrausChannel& a, const KrausChannel& b,
                     const ComplexMatrix& rho, const ControlSpec& control,
                     const MeasureSpec& measure);

/// max{0, |δG| − |δρ_class|/2}
double incoherent_gain(const GainTerms& t);

/// Coherent part of the gain from δG, Ĝ₁₂ and the classical output.
double coherent_gain(const GainTerms& t);

/// Basis maximizing the incoherent gain: α′ = α − arg ζ and
/// φ′ = ½(1 + a/√(a² + 4φ(1−φ)|ζ|²)) with a = φδ_AB − (1−φ)δ_BA.
MeasureSpec optimal_incoherent_measurement(const KrausChannel& a,
                                           const KrausChannel& b,
                                           const ComplexMatrix& rho,
                                           const ControlSpec& control);

/// ½ max{0, √(a² + 4φ(1−φ)|ζ|²) − |δρ_class|}
double optimal_incoherent_gain(const KrausChannel& a, const KrausChannel& b,
                               const ComplexMatrix& rho, const ControlSpec& control);

/// The same optimum written through the causal min-term.
double optimal_incoherent_gain_causal_form(const KrausChannel& a,
                                           const KrausChannel& b,
                                           const ComplexMatrix& rho,
                                           const ControlSpec& control);

/// Commuting maps: ½ max{0, √((2φ−1)²δ² + 4φ(1−φ)|ζ|²) − |δ|}, δ = δρ_class.
double commuting_incoherent_gain(const KrausChannel& a, const KrausChannel& b,
                                 const ComplexMatrix& rho, const ControlSpec& control);

/// ½(1 − sgn δ_AB sgn δ_BA) · min{φ|δ_AB|, (1−φ)|δ_BA|}
double causal_incoherent_gain(double delta_ab, double delta_ba, double phi);

double causal_incoherent_gain(const KrausChannel& a, const KrausChannel& b,
                              const ComplexMatrix& rho, double phi);

}  // namespace ergoswitch::qubit

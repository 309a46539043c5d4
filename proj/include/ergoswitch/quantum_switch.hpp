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

#include <optional>
#include <vector>

#include "ergoswitch/channels.hpp"
#include "ergoswitch/matcore.hpp"

namespace ergoswitch {

/// Pure control-qubit preparation |φ,α⟩ = √φ|0⟩ + e^{iα}√(1−φ)|1⟩.
class ControlSpec {
 public:
  /// Throws ParameterOutOfRange unless φ ∈ [0,1]; α is wrapped into [0, 2π).
  explicit ControlSpec(double phi = 0.5, double alpha = 0.0);

  double phi() const { return phi_; }
  double alpha() const { return alpha_; }
  ComplexVector ket() const;

 private:
  double phi_;
  double alpha_;
};

/// Projective control measurement in the basis
///   |φ′,α′⟩₊ = √φ′|0⟩ + e^{iα′}√(1−φ′)|1⟩,
///   |φ′,α′⟩₋ = −e^{−iα′}√(1−φ′)|0⟩ + √φ′|1⟩.
class MeasureSpec {
 public:
  explicit MeasureSpec(double phi = 0.5, double alpha = 0.0);

  double phi() const { return phi_; }
  double alpha() const { return alpha_; }
  ComplexVector plus() const;
  ComplexVector minus() const;

 private:
  double phi_;
  double alpha_;
};

/// Outcome-resolved system states after measuring the control.
struct ConditionalPair {
  double p_plus = 0.0;
  double p_minus = 0.0;
  /// Normalized states; empty for a branch with p <= kProbabilityFloor.
  std::optional<ComplexMatrix> rho_plus;
  std::optional<ComplexMatrix> rho_minus;
  /// p₊ρ₊ and p₋ρ₋, always present.
  ComplexMatrix weighted_plus;
  ComplexMatrix weighted_minus;
};

/// K_ij = A_i B_j ⊗ |0⟩⟨0| + B_j A_i ⊗ |1⟩⟨1| in row-major (i, j) order.
std::vector<ComplexMatrix> switch_kraus(const KrausChannel& a,
                                        const KrausChannel& b);

/// Joint system–control output for a pure control state.
ComplexMatrix switch_apply(const KrausChannel& a, const KrausChannel& b,
                           const ComplexMatrix& rho, const ControlSpec& control);

/// Joint output for the incoherent control diag(φ, 1−φ).
ComplexMatrix switch_apply_incoherent(const KrausChannel& a,
                                      const KrausChannel& b,
                                      const ComplexMatrix& rho, double phi);

/// χ[ρ] = Σ_ij A_i B_j ρ A_i† B_j†. Not a density matrix in general.
ComplexMatrix cross_map(const KrausChannel& a, const KrausChannel& b,
                        const ComplexMatrix& rho);

/// φ (A∘B)[ρ] + (1−φ) (B∘A)[ρ]
ComplexMatrix classical_output(const KrausChannel& a, const KrausChannel& b,
                               const ComplexMatrix& rho, double phi);

/// Projects the control of a joint switch output onto both basis states.
ConditionalPair conditional_states(const ComplexMatrix& joint,
                                   const MeasureSpec& measure);

ConditionalPair conditional_states(const KrausChannel& a, const KrausChannel& b,
                                   const ComplexMatrix& rho,
                                   const ControlSpec& control,
                                   const MeasureSpec& measure);

/// Ĝ with p±ρ± = ρ_class/2 ± Ĝ:
///   (φ′−½)[(φ−½){A,B} + ½[A,B]][ρ] + √(φφ′(1−φ)(1−φ′)) (e^{−i(α−α′)}χ[ρ] + h.c.)
ComplexMatrix gain_operator(const KrausChannel& a, const KrausChannel& b,
                            const ComplexMatrix& rho, const ControlSpec& control,
                            const MeasureSpec& measure);

enum class KrausBracket { Commutator, Anticommutator };

/// Σ_ij A_i B_j ρ [B_j, A_i]∓†. Satisfies χ = (A∘B)[ρ] + χⁿᶜ₋ = −(A∘B)[ρ] + χⁿᶜ₊.
ComplexMatrix chi_nc(const KrausChannel& a, const KrausChannel& b,
                     const ComplexMatrix& rho, KrausBracket bracket);

}  // namespace ergoswitch

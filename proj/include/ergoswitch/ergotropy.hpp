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

#include "ergoswitch/channels.hpp"
#include "ergoswitch/matcore.hpp"
#include "ergoswitch/quantum_switch.hpp"

namespace ergoswitch {

/// A work value split into its coherence-preserving (incoherent) and
/// coherence-consuming (coherent) parts; total = incoherent + coherent.
struct WorkSplit {
  double total = 0.0;
  double incoherent = 0.0;
  double coherent = 0.0;
};

struct ErgotropyReport {
  WorkSplit work;
  /// Σ_k r_k |ε_k⟩⟨ε_k| with r descending and ε ascending.
  ComplexMatrix passive_state;
};

/// Tr[Hρ] − Σ_k ε_k r_k
double ergotropy(const ComplexMatrix& rho, const Hamiltonian& h);

ComplexMatrix passive_state(const ComplexMatrix& rho, const Hamiltonian& h);

/// Incoherent part is the ergotropy of ρ dephased in the energy eigenbasis;
/// the coherent part is the remainder.
ErgotropyReport split_ergotropy(const ComplexMatrix& rho, const Hamiltonian& h);

/// Same split for any positive semidefinite operator, without normalization
/// checks. Ergotropy is positively homogeneous, so split_weighted(pρ) = p·split(ρ).
WorkSplit split_weighted(const ComplexMatrix& weighted, const Hamiltonian& h);

/// Commutes with H and has populations non-increasing in energy. Energy
/// levels equal within `tol` form blocks exempt from ordering among themselves.
bool is_passive(const ComplexMatrix& rho, const Hamiltonian& h, double tol = 1e-9);

struct DaemonicReport {
  MeasureSpec measure;
  double p_plus = 0.0;
  double p_minus = 0.0;
  /// Σ_a p_a W(ρ_a), with each part summed separately
  WorkSplit daemonic;
  /// Ergotropy of the classically controlled output
  WorkSplit classical;
  /// daemonic − classical, part by part
  WorkSplit gain;
};

/// Caches the joint switch output and the classical ergotropy so that many
/// measurement bases can be evaluated cheaply. Immutable after construction.
class DaemonicEvaluator {
 public:
  DaemonicEvaluator(const KrausChannel& a, const KrausChannel& b,
                    const ComplexMatrix& rho, const ControlSpec& control,
                    const Hamiltonian& h);

  DaemonicReport evaluate(const MeasureSpec& measure) const;

  const ComplexMatrix& joint() const { return joint_; }
  const ComplexMatrix& classical_state() const { return classical_state_; }
  const WorkSplit& classical() const { return classical_; }

 private:
  Hamiltonian h_;
  ComplexMatrix joint_;
  ComplexMatrix classical_state_;
  WorkSplit classical_;
};

DaemonicReport daemonic_ergotropy(const KrausChannel& a, const KrausChannel& b,
                                  const ComplexMatrix& rho,
                                  const ControlSpec& control,
                                  const MeasureSpec& measure,
                                  const Hamiltonian& h);

}  // namespace ergoswitch

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
#include <vector>

#include "ergoswitch/matcore.hpp"

namespace ergoswitch {

/// Energy reference for work: eigen-energies in ascending order together with
/// the matching orthonormal eigenvectors.
class Hamiltonian {
 public:
  /// H = diag(energies) in the computational basis; energies need not be sorted.
  static Hamiltonian diagonal(const std::vector<double>& energies);
  /// diag(0, 1), the qubit convention with ε₁ = 0 and ε₂ = 1.
  static Hamiltonian qubit();
  static Hamiltonian from_matrix(const ComplexMatrix& h);

  int dim() const { return static_cast<int>(energies_.size()); }
  const RealVector& energies() const { return energies_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
  ComplexMatrix matrix() const;

  /// ρ expressed in the energy eigenbasis, V† ρ V.
  ComplexMatrix to_energy_basis(const ComplexMatrix& rho) const;
  ComplexMatrix from_energy_basis(const ComplexMatrix& rho) const;

  /// e^{-βH}/Z
  ComplexMatrix gibbs(double beta) const;

  /// True when every energy equals the lowest one within `tol`.
  bool fully_degenerate(double tol = 1e-12) const;

 private:
  Hamiltonian(RealVector energies, ComplexMatrix eigenvectors);

  RealVector energies_;
  ComplexMatrix eigenvectors_;
};

/// A CPTP map given by an ordered Kraus list. The order is part of the
/// channel's identity: the switch cross-map depends on the decomposition.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus, std::string label);

  int dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::string& label() const { return label_; }

 private:
  int dim_;
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
};

struct CptpReport {
  bool ok = false;
  /// ‖Σ K†K − 𝟙‖ (Frobenius)
  double deficit = 0.0;
};

CptpReport validate_cptp(const KrausChannel& channel, double tol = 1e-9);

/// Σ_i K_i ρ K_i†. Call it qualified (ergoswitch::apply) when an argument
/// drags namespace std into lookup.
ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& rho);

/// outer[inner[ρ]]
ComplexMatrix apply_composed(const KrausChannel& outer, const KrausChannel& inner,
                             const ComplexMatrix& rho);

/// Kraus list {O_i I_j} in row-major order (i over `outer`, j over `inner`),
/// so that apply(compose(A, B), ρ) = A[B[ρ]].
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

/// Compares A∘B and B∘A on every matrix unit |m⟩⟨n|.
bool maps_commute(const KrausChannel& a, const KrausChannel& b,
                  double tol = 1e-10);

/// Clock-and-shift unitaries U_{a,b} = X^a Z^b, index a·d + b.
std::vector<ComplexMatrix> weyl_basis(int d);

KrausChannel identity_channel(int d);

/// Kraus {U_i / d}; maps every state to 𝟙/d.
KrausChannel depolarizing(int d);

/// Kraus {√σ U_i / √d}; maps every state to σ.
KrausChannel replacement(const ComplexMatrix& target, std::string label = "replacement");

/// replacement(e^{-βH}/Z) with the principal square root of the Gibbs state.
KrausChannel thermalizing(const Hamiltonian& h, double beta);

/// Generalized amplitude damping; Kraus order A₀ (damping, no jump),
/// A₁ (damping jump), A₂ (pumping, no jump), A₃ (pumping jump).
KrausChannel gad(double p, double gamma);

/// Kraus {√q 𝟙, √(1−q) σz}.
KrausChannel phase_flip(double q);

KrausChannel unitary_channel(const ComplexMatrix& u, std::string label = "unitary");

/// exp(-iθσx/2) as a single-Kraus channel.
KrausChannel x_rotation(double theta);

}  // namespace ergoswitch

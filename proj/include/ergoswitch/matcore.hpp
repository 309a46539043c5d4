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

#include <Eigen/Dense>
#include <complex>
#include <optional>

namespace ergoswitch {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Maximum entrywise deviation allowed between M and M† for hermitian_eig.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues closer than this are treated as one degenerate group.
inline constexpr double kDegeneracyTol = 1e-10;
/// Conditional branches at or below this probability are degenerate.
inline constexpr double kProbabilityFloor = 1e-12;

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted in descending order. Within a group of eigenvalues
/// equal to kDegeneracyTol the columns are ordered by the index of their
/// largest-magnitude component, and every column carries a global phase that
/// makes that component real and positive.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  /// Σ_k r_k |r_k⟩⟨r_k|
  ComplexMatrix reconstruct() const;
};

/// max_{ij} |M_ij - conj(M_ji)|
double hermiticity_defect(const ComplexMatrix& m);

/// Throws NonHermitian when the defect exceeds kHermitianTol.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only, descending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// S ⊗ Q with the qubit as the fast index: out((m,j),(n,k)) = S_mn Q_jk,
/// joint index (m,j) -> 2m + j.
ComplexMatrix tensor_with_qubit(const ComplexMatrix& system,
                                const ComplexMatrix& qubit);

/// Tr_Q over the fast (qubit) index. Throws OddDimension.
ComplexMatrix partial_trace_q(const ComplexMatrix& joint);

struct QubitProjection {
  double probability = 0.0;
  /// Normalized post-measurement state; empty when probability <= kProbabilityFloor.
  std::optional<ComplexMatrix> state;
  /// Tr_Q[(1 ⊗ |v⟩⟨v|) J], kept so callers can sum branches without renormalizing.
  ComplexMatrix unnormalized;

  bool degenerate() const { return !state.has_value(); }
};

/// Projects the control qubit of a joint state onto the pure state `control`.
QubitProjection project_q(const ComplexMatrix& joint,
                          const ComplexVector& control);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry; all tolerances in the library are absolute.
double max_abs(const ComplexMatrix& m);

/// Hermitian, unit trace and positive semidefinite within `tol`.
bool is_density_matrix(const ComplexMatrix& rho, double tol = 1e-10);

/// Throws InvalidState with a description of the first failed condition.
void require_density_matrix(const ComplexMatrix& rho, double tol = 1e-9);

/// Replaces M by (M + M†)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite Hermitian matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace ergoswitch

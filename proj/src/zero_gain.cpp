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

#include "ergoswitch/zero_gain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergoswitch {

std::string to_string(ZeroGainRegime regime) {
  switch (regime) {
    case ZeroGainRegime::Generic:
      return "generic";
    case ZeroGainRegime::DegenerateHamiltonian:
      return "degenerate_hamiltonian";
    case ZeroGainRegime::DegenerateClassical:
      return "degenerate_classical";
    case ZeroGainRegime::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

ZeroGainCheck zero_gain_check(const KrausChannel& a, const KrausChannel& b,
                              const ComplexMatrix& rho, const ControlSpec& control,
                              const MeasureSpec& measure, const Hamiltonian& h,
                              const ZeroGainTolerances& tol) {
  ZeroGainCheck out;
  const ComplexMatrix g = gain_operator(a, b, rho, control, measure);
  const ComplexMatrix classical = classical_output(a, b, rho, control.phi());
  const SpectralDecomposition spec = hermitian_eig(hermitian_part(classical));
  const ComplexMatrix g_class = spec.eigenvectors.adjoint() * g * spec.eigenvectors;
  const Eigen::Index d = classical.rows();

  out.commutator_residual = max_abs(commutator(g, classical));
  out.min_gap = d > 1 ? std::numeric_limits<double>::infinity() : 0.0;
  out.ordering_residual = -std::numeric_limits<double>::infinity();
  int small_gaps = 0;
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    const double gap = spec.eigenvalues(k) - spec.eigenvalues(k + 1);
    const double dg = std::abs(g_class(k, k) - g_class(k + 1, k + 1));
    out.min_gap = std::min(out.min_gap, gap);
    out.ordering_residual = std::max(out.ordering_residual, 2.0 * dg - gap);
    out.degeneracy_residual = std::max(out.degeneracy_residual, dg);
    if (gap < tol.gap) ++small_gaps;
  }
  if (d == 1) out.ordering_residual = 0.0;

  if (h.fully_degenerate()) {
    out.regime = ZeroGainRegime::DegenerateHamiltonian;
    out.predicted_zero = true;
    return out;
  }
  if (d > 1 && small_gaps == d - 1) {
    // Every basis diagonalizes ρ_class; zero gain needs Ĝ ∝ 𝟙, which also
    // has to hold off the diagonal.
    const Complex mean = g.trace() / static_cast<double>(d);
    const ComplexMatrix shifted = g - mean * ComplexMatrix::Identity(d, d);
    out.degeneracy_residual = max_abs(shifted);
    out.regime = ZeroGainRegime::DegenerateClassical;
    out.predicted_zero = out.degeneracy_residual <= tol.commutator;
    return out;
  }
  if (small_gaps > 0) {
    out.regime = ZeroGainRegime::Indeterminate;
    out.indeterminate = true;
    out.predicted_zero = false;
    return out;
  }
  out.regime = ZeroGainRegime::Generic;
  out.predicted_zero = out.commutator_residual <= tol.commutator &&
                       out.ordering_residual <= tol.ordering;
  return out;
}

}  // namespace ergoswitch

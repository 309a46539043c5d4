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

#include "ergoswitch/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/QR>

namespace ergoswitch {

int Rng::index(int n) {
  return std::min(n - 1, static_cast<int>(uniform() * n));
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix random_ginibre(Rng& rng, int rows, int cols) {
  ComplexMatrix g(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_density_matrix(Rng& rng, int d, int rank) {
  const int k = rank <= 0 ? d : std::min(rank, d);
  const ComplexMatrix g = random_ginibre(rng, d, k);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return hermitian_part(rho);
}

ComplexMatrix random_pure_state(Rng& rng, int d) {
  return random_density_matrix(rng, d, 1);
}

ComplexMatrix random_hermitian(Rng& rng, int d) {
  return hermitian_part(random_ginibre(rng, d, d));
}

ComplexMatrix random_unitary(Rng& rng, int d) {
  const ComplexMatrix g = random_ginibre(rng, d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Hamiltonian random_hamiltonian(Rng& rng, int d) {
  std::vector<double> energies(d, 0.0);
  for (int k = 1; k < d; ++k) energies[k] = rng.uniform(0.05, 1.0);
  return Hamiltonian::diagonal(energies);
}

ControlSpec random_control(Rng& rng) {
  const double phi = rng.uniform();
  return ControlSpec(phi, rng.uniform(0.0, 2.0 * std::numbers::pi));
}

MeasureSpec random_measure(Rng& rng) {
  const double phi = rng.uniform();
  return MeasureSpec(phi, rng.uniform(0.0, 2.0 * std::numbers::pi));
}

KrausChannel random_zoo_channel(Rng& rng, int d) {
  const int kinds = d == 2 ? 8 : 5;
  switch (rng.index(kinds)) {
    case 0:
      return identity_channel(d);
    case 1:
      return depolarizing(d);
    case 2: {
      const Hamiltonian h = random_hamiltonian(rng, d);
      return thermalizing(h, rng.uniform(0.0, 3.0));
    }
    case 3:
      return unitary_channel(random_unitary(rng, d));
    case 4:
      return replacement(random_density_matrix(rng, d));
    case 5: {
      const double p = rng.uniform();
      return gad(p, rng.uniform());
    }
    case 6:
      return phase_flip(rng.uniform());
    default:
      return x_rotation(rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
}

}  // namespace ergoswitch

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

#include <cstdint>
#include <random>

#include "ergoswitch/channels.hpp"
#include "ergoswitch/quantum_switch.hpp"

namespace ergoswitch {

/// Seeded generator with a platform-independent mapping to doubles.
/// std::mt19937_64 output is fixed by the standard; the distribution
/// classes are not, so the conversions are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  int index(int n);
  /// Standard normal via Box–Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

ComplexMatrix random_ginibre(Rng& rng, int rows, int cols);

/// Ginibre-induced mixed state of the given rank (rank ≤ 0 means full).
ComplexMatrix random_density_matrix(Rng& rng, int d, int rank = 0);

ComplexMatrix random_pure_state(Rng& rng, int d);

ComplexMatrix random_hermitian(Rng& rng, int d);

/// Haar unitary from the QR decomposition of a Ginibre matrix.
ComplexMatrix random_unitary(Rng& rng, int d);

/// Diagonal Hamiltonian with energies drawn from [0, 1] and ε₁ = 0.
Hamiltonian random_hamiltonian(Rng& rng, int d);

ControlSpec random_control(Rng& rng);
MeasureSpec random_measure(Rng& rng);

/// One channel drawn from the zoo with random parameters. Qubit-only
/// members are skipped when d ≠ 2.
KrausChannel random_zoo_channel(Rng& rng, int d);

}  // namespace ergoswitch

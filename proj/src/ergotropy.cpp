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

#include "ergoswitch/ergotropy.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "ergoswitch/errors.hpp"

namespace ergoswitch {

namespace {

// Σ ε_k x_k with x sorted descending against ascending energies.
double passive_energy(std::vector<double> values, const RealVector& energies) {
  std::sort(values.begin(), values.end(), std::greater<>());
  double e = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    e += energies[static_cast<Eigen::Index>(k)] * values[k];
  }
  return e;
}

std::vector<double> to_vector(const RealVector& v) {
  return {v.data(), v.data() + v.size()};
}

void require_state_for(const ComplexMatrix& rho, const Hamiltonian& h) {
  if (rho.rows() != h.dim() || rho.cols() != h.dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.rows()) +
                            " does not match Hamiltonian dimension " +
                            std::to_string(h.dim()));
  }
  require_density_matrix(rho);
}

}  // namespace

WorkSplit split_weighted(const ComplexMatrix& weighted, const Hamiltonian& h) {
  const ComplexMatrix in_basis = h.to_energy_basis(weighted);
  const RealVector& energies = h.energies();
  std::vector<double> populations(static_cast<std::size_t>(h.dim()));
  double mean_energy = 0.0;
  for (Eigen::Index k = 0; k < h.dim(); ++k) {
    populations[static_cast<std::size_t>(k)] = in_basis(k, k).real();
    mean_energy += energies[k] * in_basis(k, k).real();
  }
  const double raw_total =
      mean_energy - passive_energy(to_vector(hermitian_eigenvalues(in_basis)), energies);
  const double raw_incoherent = mean_energy - passive_energy(populations, energies);

  // Clamp rounding noise; total is rebuilt from the parts so the ledger closes.
  WorkSplit split;
  split.incoherent = std::max(0.0, raw_incoherent);
  split.coherent = std::max(0.0, std::max(0.0, raw_total) - split.incoherent);
  split.total = split.incoherent + split.coherent;
  return split;
}

double ergotropy(const ComplexMatrix& rho, const Hamiltonian& h) {
  require_state_for(rho, h);
  return split_weighted(rho, h).total;
}

ComplexMatrix passive_state(const ComplexMatrix& rho, const Hamiltonian& h) {
  require_state_for(rho, h);
  const RealVector r = hermitian_eigenvalues(rho);
  return h.from_energy_basis(r.cast<Complex>().asDiagonal());
}

ErgotropyReport split_ergotropy(const ComplexMatrix& rho, const Hamiltonian& h) {
  require_state_for(rho, h);
  ErgotropyReport report;
  report.work = split_weighted(rho, h);
  report.passive_state =
      h.from_energy_basis(hermitian_eigenvalues(rho).cast<Complex>().asDiagonal());
  return report;
}

bool is_passive(const ComplexMatrix& rho, const Hamiltonian& h, double tol) {
  const ComplexMatrix in_basis = h.to_energy_basis(rho);
  if (max_abs(commutator(rho, h.matrix())) > tol) return false;

  const RealVector& energies = h.energies();
  const Eigen::Index n = h.dim();
  // Spectrum of each degenerate-energy block, then compare neighbours:
  // the least populated state of a block must not be below the most
  // populated state of the next block up.
  double previous_min = 0.0;
  bool have_previous = false;
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && energies[end] - energies[end - 1] <= tol) ++end;
    const RealVector block =
        hermitian_eigenvalues(in_basis.block(begin, begin, end - begin, end - begin));
    if (have_previous && block.maxCoeff() > previous_min + tol) return false;
    previous_min = block.minCoeff();
    have_previous = true;
    begin = end;
  }
  return true;
}

DaemonicEvaluator::DaemonicEvaluator(const KrausChannel& a, const KrausChannel& b,
                                     const ComplexMatrix& rho,
                                     const ControlSpec& control,
                                     const Hamiltonian& h)
    : h_(h) {
  require_state_for(rho, h);
  joint_ = switch_apply(a, b, rho, control);
  classical_state_ = classical_output(a, b, rho, control.phi());
  classical_ = split_weighted(classical_state_, h_);
}

DaemonicReport DaemonicEvaluator::evaluate(const MeasureSpec& measure) const {
  const ConditionalPair pair = conditional_states(joint_, measure);
  DaemonicReport report;
  report.measure = measure;
  report.p_plus = pair.p_plus;
  report.p_minus = pair.p_minus;
  report.classical = classical_;

  WorkSplit sum;
  const auto accumulate = [&](double p, const ComplexMatrix& weighted) {
    if (p <= kProbabilityFloor) return;
    const WorkSplit part = split_weighted(hermitian_part(weighted), h_);
    sum.total += part.total;
    sum.incoherent += part.incoherent;
    sum.coherent += part.coherent;
  };
  accumulate(pair.p_plus, pair.weighted_plus);
  accumulate(pair.p_minus, pair.weighted_minus);
  report.daemonic = sum;

  report.gain.total = sum.total - classical_.total;
  report.gain.incoherent = sum.incoherent - classical_.incoherent;
  report.gain.coherent = sum.coherent - classical_.coherent;
  return report;
}

DaemonicReport daemonic_ergotropy(const KrausChannel& a, const KrausChannel& b,
                                  const ComplexMatrix& rho,
                                  const ControlSpec& control,
                                  const MeasureSpec& measure,
                                  const Hamiltonian& h) {
  return DaemonicEvaluator(a, b, rho, control, h).evaluate(measure);
}

}  // namespace ergoswitch

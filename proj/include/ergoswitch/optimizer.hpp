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

#include "ergoswitch/ergotropy.hpp"

namespace ergoswitch {

struct OptimizerOptions {
  int grid_phi = 65;        ///< φ′ = i/(grid_phi − 1)
  int grid_alpha = 65;      ///< α′ = 2πk/grid_alpha
  double xtol = 1e-10;      ///< simplex size at which refinement stops
  int max_iterations = 2000;
  bool parallel_grid = true;
};

struct OptimizationResult {
  MeasureSpec measure;
  DaemonicReport report;
  int evaluations = 0;
};

/// Maximizes the daemonic ergotropy over projective control measurements.
/// Grid ties resolve toward the smaller φ′, then the smaller α′.
OptimizationResult optimize_measurement(const DaemonicEvaluator& evaluator,
                                        const OptimizerOptions& options = {});

OptimizationResult optimize_measurement(const KrausChannel& a, const KrausChannel& b,
                                        const ComplexMatrix& rho,
                                        const ControlSpec& control,
                                        const Hamiltonian& h,
                                        const OptimizerOptions& options = {});

}  // namespace ergoswitch

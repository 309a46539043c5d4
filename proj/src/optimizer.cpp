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

#include "ergoswitch/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "ergoswitch/parallel.hpp"

namespace ergoswitch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Refinement runs in (θ, α′) with φ′ = (1 + cos θ)/2, which removes the
// box constraint on φ′.
using Point = std::array<double, 2>;

MeasureSpec to_measure(const Point& x) {
  const double phi = std::clamp(0.5 * (1.0 + std::cos(x[0])), 0.0, 1.0);
  return MeasureSpec(phi, x[1]);
}

Point from_measure(const MeasureSpec& m) {
  return {std::acos(std::clamp(2.0 * m.phi() - 1.0, -1.0, 1.0)), m.alpha()};
}

struct Vertex {
  Point x;
  double value;  // −W^D, minimized
};

class NelderMead {
 public:
  NelderMead(const DaemonicEvaluator& evaluator, int& evaluations)
      : evaluator_(evaluator), evaluations_(evaluations) {}

  Vertex run(const Point& start, const Point& step, double xtol, int max_iterations) {
    std::array<Vertex, 3> s = {make(start), make({start[0] + step[0], start[1]}),
                               make({start[0], start[1] + step[1]})};
    for (int iter = 0; iter < max_iterations; ++iter) {
      std::sort(s.begin(), s.end(),
                [](const Vertex& l, const Vertex& r) { return l.value < r.value; });
      if (size(s) < xtol) break;

      const Point centroid = {0.5 * (s[0].x[0] + s[1].x[0]),
                              0.5 * (s[0].x[1] + s[1].x[1])};
      auto along = [&](double t) {
        return Point{centroid[0] + t * (s[2].x[0] - centroid[0]),
                     centroid[1] + t * (s[2].x[1] - centroid[1])};
      };

      const Vertex reflected = make(along(-1.0));
      if (reflected.value < s[0].value) {
        const Vertex expanded = make(along(-2.0));
        s[2] = expanded.value < reflected.value ? expanded : reflected;
        continue;
      }
      if (reflected.value < s[1].value) {
        s[2] = reflected;
        continue;
      }
      const bool outside = reflected.value < s[2].value;
      const Vertex contracted = make(along(outside ? -0.5 : 0.5));
      if (contracted.value < (outside ? reflected.value : s[2].value)) {
        s[2] = contracted;
        continue;
      }
      for (std::size_t k = 1; k < s.size(); ++k) {
        s[k] = make({s[0].x[0] + 0.5 * (s[k].x[0] - s[0].x[0]),
                     s[0].x[1] + 0.5 * (s[k].x[1] - s[0].x[1])});
      }
    }
    return *std::min_element(s.begin(), s.end(), [](const Vertex& l, const Vertex& r) {
      return l.value < r.value;
    });
  }

 private:
  Vertex make(const Point& x) {
    ++evaluations_;
    return {x, -evaluator_.evaluate(to_measure(x)).daemonic.total};
  }

  static double size(const std::array<Vertex, 3>& s) {
    double out = 0.0;
    for (std::size_t k = 1; k < s.size(); ++k) {
      out = std::max({out, std::abs(s[k].x[0] - s[0].x[0]),
                      std::abs(s[k].x[1] - s[0].x[1])});
    }
    return out;
  }

  const DaemonicEvaluator& evaluator_;
  int& evaluations_;
};

}  // namespace

OptimizationResult optimize_measurement(const DaemonicEvaluator& evaluator,
                                        const OptimizerOptions& options) {
  const int nphi = std::max(2, options.grid_phi);
  const int nalpha = std::max(1, options.grid_alpha);
  const std::size_t total = static_cast<std::size_t>(nphi) * nalpha;

  std::vector<double> values(total);
  auto probe = [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / nalpha;
    const int k = static_cast<int>(idx) % nalpha;
    const MeasureSpec m(static_cast<double>(i) / (nphi - 1), kTwoPi * k / nalpha);
    values[idx] = evaluator.evaluate(m).daemonic.total;
  };
  if (options.parallel_grid) {
    parallel_for(total, probe);
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) probe(idx);
  }

  // Row-major scan with strict improvement keeps the first (smallest φ′, α′) maximum.
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < total; ++idx) {
    if (values[idx] > values[best]) best = idx;
  }
  const MeasureSpec grid_best(static_cast<double>(best / nalpha) / (nphi - 1),
                              kTwoPi * static_cast<double>(best % nalpha) / nalpha);

  int evaluations = static_cast<int>(total);
  NelderMead nm(evaluator, evaluations);
  Vertex refined = nm.run(from_measure(grid_best), {0.1, kTwoPi / nalpha},
                          options.xtol, options.max_iterations);
  const Vertex restarted = nm.run(refined.x, {1e-3, 1e-3}, options.xtol,
                                  options.max_iterations);
  if (restarted.value < refined.value) refined = restarted;

  OptimizationResult result;
  if (-refined.value > values[best]) {
    result.measure = to_measure(refined.x);
  } else {
    result.measure = grid_best;
  }
  result.report = evaluator.evaluate(result.measure);
  result.evaluations = evaluations + 1;
  return result;
}

OptimizationResult optimize_measurement(const KrausChannel& a, const KrausChannel& b,
                                        const ComplexMatrix& rho,
                                        const ControlSpec& control,
                                        const Hamiltonian& h,
                                        const OptimizerOptions& options) {
  return optimize_measurement(DaemonicEvaluator(a, b, rho, control, h), options);
}

}  // namespace ergoswitch

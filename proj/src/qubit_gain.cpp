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

#include "ergoswitch/qubit_gain.hpp"

#include <algorithm>
#include <cmath>

#include "ergoswitch/errors.hpp"

namespace ergoswitch::qubit {

namespace {

void require_qubit(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw NotQubit("expected a 2x2 state, got " + std::to_string(rho.rows()) +
                   "x" + std::to_string(rho.cols()));
  }
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

double imbalance(const ComplexMatrix& m) { return (m(1, 1) - m(0, 0)).real(); }

// Commutator-weighted imbalance a = φδ_AB − (1−φ)δ_BA.
double order_contrast(const GainTerms& t) {
  return t.phi * t.delta_ab - (1.0 - t.phi) * t.delta_ba;
}

}  // namespace

double population_imbalance(const ComplexMatrix& rho) {
  require_qubit(rho);
  return imbalance(rho);
}

WorkSplit split_closed_form(const ComplexMatrix& rho) {
  require_qubit(rho);
  const double delta = imbalance(rho);
  const double purity = (rho * rho).trace().real();
  const double eta = std::sqrt(std::max(0.0, 2.0 * purity - 1.0));
  const double coherence2 = std::norm(rho(0, 1));
  WorkSplit split;
  split.incoherent = std::max(0.0, delta);
  split.coherent = 0.5 * (eta - std::sqrt(std::max(0.0, eta * eta - 4.0 * coherence2)));
  split.total = split.incoherent + split.coherent;
  return split;
}

GainTerms gain_terms(const KrausChannel& a, const KrausChannel& b,
                     const ComplexMatrix& rho, const ControlSpec& control,
                     const MeasureSpec& measure) {
  require_qubit(rho);
  GainTerms t;
  t.phi = control.phi();
  const ComplexMatrix ab = apply_composed(a, b, rho);
  const ComplexMatrix ba = apply_composed(b, a, rho);
  const ComplexMatrix chi = cross_map(a, b, rho);
  t.delta_ab = imbalance(ab);
  t.delta_ba = imbalance(ba);
  t.delta_class = t.phi * t.delta_ab + (1.0 - t.phi) * t.delta_ba;
  t.zeta = chi(1, 1) - chi(0, 0);

  const double phi_m = measure.phi();
  const double weight =
      std::sqrt(t.phi * phi_m * (1.0 - t.phi) * (1.0 - phi_m));
  const Complex phase = std::polar(1.0, -(control.alpha() - measure.alpha()));
  t.delta_g = 0.5 * (2.0 * phi_m - 1.0) * order_contrast(t) +
              2.0 * weight * (phase * t.zeta).real();

  const ComplexMatrix g = gain_operator(a, b, rho, control, measure);
  t.g12 = g(0, 1);
  t.class12 = t.phi * ab(0, 1) + (1.0 - t.phi) * ba(0, 1);
  return t;
}

double incoherent_gain(const GainTerms& t) {
  return std::max(0.0, std::abs(t.delta_g) - 0.5 * std::abs(t.delta_class));
}

double coherent_gain(const GainTerms& t) {
  const double dc = t.delta_class;
  const double dg = t.delta_g;
  const double plus = std::sqrt((dc + 2.0 * dg) * (dc + 2.0 * dg) +
                                4.0 * std::norm(t.class12 + 2.0 * t.g12));
  const double minus = std::sqrt((dc - 2.0 * dg) * (dc - 2.0 * dg) +
                                 4.0 * std::norm(t.class12 - 2.0 * t.g12));
  const double classical = std::sqrt(dc * dc + 4.0 * std::norm(t.class12));
  const double incoherent = 0.5 * std::abs(dc + 2.0 * dg) +
                            0.5 * std::abs(dc - 2.0 * dg) - std::abs(dc);
  return 0.5 * (0.5 * plus + 0.5 * minus - classical - incoherent);
}

MeasureSpec optimal_incoherent_measurement(const KrausChannel& a,
                                           const KrausChannel& b,
                                           const ComplexMatrix& rho,
                                           const ControlSpec& control) {
  const GainTerms t = gain_terms(a, b, rho, control, MeasureSpec());
  const double contrast = order_contrast(t);
  const double norm = std::sqrt(contrast * contrast + 4.0 * t.phi * (1.0 - t.phi) *
                                                          std::norm(t.zeta));
  const double phi_m = norm > 0.0 ? 0.5 * (1.0 + contrast / norm) : 0.5;
  const double arg = std::abs(t.zeta) > 0.0 ? std::arg(t.zeta) : 0.0;
  return MeasureSpec(std::clamp(phi_m, 0.0, 1.0), control.alpha() - arg);
}

double optimal_incoherent_gain(const KrausChannel& a, const KrausChannel& b,
                               const ComplexMatrix& rho, const ControlSpec& control) {
  const GainTerms t = gain_terms(a, b, rho, control, MeasureSpec());
  const double contrast = order_contrast(t);
  const double norm = std::sqrt(contrast * contrast + 4.0 * t.phi * (1.0 - t.phi) *
                                                          std::norm(t.zeta));
  return 0.5 * std::max(0.0, norm - std::abs(t.delta_class));
}

double optimal_incoherent_gain_causal_form(const KrausChannel& a,
                                           const KrausChannel& b,
                                           const ComplexMatrix& rho,
                                           const ControlSpec& control) {
  const GainTerms t = gain_terms(a, b, rho, control, MeasureSpec());
  const double shared = std::min(t.phi * std::abs(t.delta_ab),
                                 (1.0 - t.phi) * std::abs(t.delta_ba));
  const double shifted = std::abs(t.delta_class) -
                         2.0 * sign(t.delta_ab) * sign(t.delta_ba) * shared;
  const double norm = std::sqrt(shifted * shifted + 4.0 * t.phi * (1.0 - t.phi) *
                                                        std::norm(t.zeta));
  return 0.5 * std::max(0.0, norm - std::abs(t.delta_class));
}

double commuting_incoherent_gain(const KrausChannel& a, const KrausChannel& b,
                                 const ComplexMatrix& rho, const ControlSpec& control) {
  const GainTerms t = gain_terms(a, b, rho, control, MeasureSpec());
  const double dc = t.delta_class;
  const double skew = 2.0 * t.phi - 1.0;
  const double norm = std::sqrt(skew * skew * dc * dc +
                                4.0 * t.phi * (1.0 - t.phi) * std::norm(t.zeta));
  return 0.5 * std::max(0.0, norm - std::abs(dc));
}

double causal_incoherent_gain(double delta_ab, double delta_ba, double phi) {
  if (!(phi >= 0.0 && phi <= 1.0)) {
    throw ParameterOutOfRange("causal_incoherent_gain: phi outside [0, 1]");
  }
  return 0.5 * (1.0 - sign(delta_ab) * sign(delta_ba)) *
         std::min(phi * std::abs(delta_ab), (1.0 - phi) * std::abs(delta_ba));
}

double causal_incoherent_gain(const KrausChannel& a, const KrausChannel& b,
                              const ComplexMatrix& rho, double phi) {
  require_qubit(rho);
  return causal_incoherent_gain(imbalance(apply_composed(a, b, rho)),
                                imbalance(apply_composed(b, a, rho)), phi);
}

}  // namespace ergoswitch::qubit

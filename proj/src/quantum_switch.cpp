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

#include "ergoswitch/quantum_switch.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ergoswitch/errors.hpp"

namespace ergoswitch {

namespace {

double wrap_phase(double alpha) {
  if (!std::isfinite(alpha)) throw ParameterOutOfRange("phase must be finite");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(alpha, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

double checked_weight(double phi, const char* what) {
  if (!(phi >= 0.0 && phi <= 1.0)) {
    std::ostringstream os;
    os << what << " = " << phi << " is outside [0, 1]";
    throw ParameterOutOfRange(os.str());
  }
  return phi;
}

void require_pair(const KrausChannel& a, const KrausChannel& b,
                  const ComplexMatrix& rho, const char* what) {
  if (a.dim() != b.dim() || rho.rows() != a.dim() || rho.cols() != a.dim()) {
    std::ostringstream os;
    os << what << ": dimensions A=" << a.dim() << " B=" << b.dim()
       << " rho=" << rho.rows() << "x" << rho.cols();
    throw DimensionMismatch(os.str());
  }
}

ComplexMatrix joint_from_kraus(const std::vector<ComplexMatrix>& kraus,
                               const ComplexMatrix& input) {
  ComplexMatrix out = ComplexMatrix::Zero(input.rows(), input.cols());
  for (const auto& k : kraus) out += k * input * k.adjoint();
  return out;
}

}  // namespace

ControlSpec::ControlSpec(double phi, double alpha)
    : phi_(checked_weight(phi, "control phi")), alpha_(wrap_phase(alpha)) {}

ComplexVector ControlSpec::ket() const {
  ComplexVector v(2);
  v << std::sqrt(phi_), std::polar(std::sqrt(1.0 - phi_), alpha_);
  return v;
}

MeasureSpec::MeasureSpec(double phi, double alpha)
    : phi_(checked_weight(phi, "measurement phi")), alpha_(wrap_phase(alpha)) {}

ComplexVector MeasureSpec::plus() const {
  ComplexVector v(2);
  v << std::sqrt(phi_), std::polar(std::sqrt(1.0 - phi_), alpha_);
  return v;
}

ComplexVector MeasureSpec::minus() const {
  ComplexVector v(2);
  v << -std::polar(std::sqrt(1.0 - phi_), -alpha_), std::sqrt(phi_);
  return v;
}

std::vector<ComplexMatrix> switch_kraus(const KrausChannel& a,
                                        const KrausChannel& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("switch_kraus: channel dimensions differ");
  }
  ComplexMatrix first = ComplexMatrix::Zero(2, 2);
  first(0, 0) = 1.0;
  ComplexMatrix second = ComplexMatrix::Zero(2, 2);
  second(1, 1) = 1.0;
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ai : a.kraus()) {
    for (const auto& bj : b.kraus()) {
      kraus.push_back(tensor_with_qubit(ai * bj, first) +
                      tensor_with_qubit(bj * ai, second));
    }
  }
  return kraus;
}

ComplexMatrix switch_apply(const KrausChannel& a, const KrausChannel& b,
                           const ComplexMatrix& rho, const ControlSpec& control) {
  require_pair(a, b, rho, "switch_apply");
  const ComplexVector ket = control.ket();
  return joint_from_kraus(switch_kraus(a, b),
                          tensor_with_qubit(rho, ket * ket.adjoint()));
}

ComplexMatrix switch_apply_incoherent(const KrausChannel& a,
                                      const KrausChannel& b,
                                      const ComplexMatrix& rho, double phi) {
  require_pair(a, b, rho, "switch_apply_incoherent");
  checked_weight(phi, "control phi");
  ComplexMatrix control = ComplexMatrix::Zero(2, 2);
  control(0, 0) = phi;
  control(1, 1) = 1.0 - phi;
  return joint_from_kraus(switch_kraus(a, b), tensor_with_qubit(rho, control));
}

ComplexMatrix cross_map(const KrausChannel& a, const KrausChannel& b,
                        const ComplexMatrix& rho) {
  require_pair(a, b, rho, "cross_map");
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& ai : a.kraus()) {
    for (const auto& bj : b.kraus()) {
      out += ai * bj * rho * ai.adjoint() * bj.adjoint();
    }
  }
  return out;
}

ComplexMatrix classical_output(const KrausChannel& a, const KrausChannel& b,
                               const ComplexMatrix& rho, double phi) {
  require_pair(a, b, rho, "classical_output");
  checked_weight(phi, "control phi");
  return phi * apply_composed(a, b, rho) + (1.0 - phi) * apply_composed(b, a, rho);
}

ConditionalPair conditional_states(const ComplexMatrix& joint,
                                   const MeasureSpec& measure) {
  QubitProjection plus = project_q(joint, measure.plus());
  QubitProjection minus = project_q(joint, measure.minus());
  ConditionalPair pair;
  pair.p_plus = plus.probability;
  pair.p_minus = minus.probability;
  pair.rho_plus = std::move(plus.state);
  pair.rho_minus = std::move(minus.state);
  pair.weighted_plus = std::move(plus.unnormalized);
  pair.weighted_minus = std::move(minus.unnormalized);
  return pair;
}

ConditionalPair conditional_states(const KrausChannel& a, const KrausChannel& b,
                                   const ComplexMatrix& rho,
                                   const ControlSpec& control,
                                   const MeasureSpec& measure) {
  return conditional_states(switch_apply(a, b, rho, control), measure);
}

ComplexMatrix gain_operator(const KrausChannel& a, const KrausChannel& b,
                            const ComplexMatrix& rho, const ControlSpec& control,
                            const MeasureSpec& measure) {
  require_pair(a, b, rho, "gain_operator");
  const double phi = control.phi();
  const double phi_m = measure.phi();
  const ComplexMatrix ab = apply_composed(a, b, rho);
  const ComplexMatrix ba = apply_composed(b, a, rho);
  const ComplexMatrix weighted_chi =
      std::polar(1.0, -(control.alpha() - measure.alpha())) * cross_map(a, b, rho);
  const double coherence = std::sqrt(phi * phi_m * (1.0 - phi) * (1.0 - phi_m));
  return (phi_m - 0.5) * ((phi - 0.5) * (ab + ba) + 0.5 * (ab - ba)) +
         coherence * (weighted_chi + weighted_chi.adjoint());
}

ComplexMatrix chi_nc(const KrausChannel& a, const KrausChannel& b,
                     const ComplexMatrix& rho, KrausBracket bracket) {
  require_pair(a, b, rho, "chi_nc");
  const double sign = bracket == KrausBracket::Commutator ? -1.0 : 1.0;
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& ai : a.kraus()) {
    for (const auto& bj : b.kraus()) {
      const ComplexMatrix bracketed = bj * ai + sign * ai * bj;
      out += ai * bj * rho * bracketed.adjoint();
    }
  }
  return out;
}

}  // namespace ergoswitch

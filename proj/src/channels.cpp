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

#include "ergoswitch/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ergoswitch/errors.hpp"

namespace ergoswitch {

namespace {

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << value << " is outside [0, 1]";
    throw ParameterOutOfRange(os.str());
  }
}

void require_same_dim(const KrausChannel& a, const KrausChannel& b,
                      const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": channel dimensions " << a.dim() << " and " << b.dim()
       << " differ";
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

Hamiltonian::Hamiltonian(RealVector energies, ComplexMatrix eigenvectors)
    : energies_(std::move(energies)), eigenvectors_(std::move(eigenvectors)) {}

Hamiltonian Hamiltonian::diagonal(const std::vector<double>& energies) {
  if (energies.empty()) throw DimensionMismatch("Hamiltonian needs at least one level");
  std::vector<std::size_t> order(energies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return energies[a] < energies[b];
  });
  const auto n = static_cast<Eigen::Index>(energies.size());
  RealVector sorted(n);
  ComplexMatrix basis = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const std::size_t src = order[static_cast<std::size_t>(k)];
    sorted[k] = energies[src];
    basis(static_cast<Eigen::Index>(src), k) = 1.0;
  }
  return Hamiltonian(std::move(sorted), std::move(basis));
}

Hamiltonian Hamiltonian::qubit() { return diagonal({0.0, 1.0}); }

Hamiltonian Hamiltonian::from_matrix(const ComplexMatrix& h) {
  const SpectralDecomposition spec = hermitian_eig(h);
  return Hamiltonian(spec.eigenvalues.reverse(),
                     spec.eigenvectors.rowwise().reverse());
}

ComplexMatrix Hamiltonian::matrix() const {
  return eigenvectors_ * energies_.cast<Complex>().asDiagonal() *
         eigenvectors_.adjoint();
}

ComplexMatrix Hamiltonian::to_energy_basis(const ComplexMatrix& rho) const {
  if (rho.rows() != dim() || rho.cols() != dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.rows()) +
                            " does not match Hamiltonian dimension " +
                            std::to_string(dim()));
  }
  return eigenvectors_.adjoint() * rho * eigenvectors_;
}

ComplexMatrix Hamiltonian::from_energy_basis(const ComplexMatrix& rho) const {
  return eigenvectors_ * rho * eigenvectors_.adjoint();
}

ComplexMatrix Hamiltonian::gibbs(double beta) const {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw ParameterOutOfRange("inverse temperature must be finite and >= 0");
  }
  // Shift by the ground energy so large β does not underflow every weight.
  RealVector weights = (-(energies_.array() - energies_[0]) * beta).exp().matrix();
  weights /= weights.sum();
  return from_energy_basis(weights.cast<Complex>().asDiagonal());
}

bool Hamiltonian::fully_degenerate(double tol) const {
  return energies_[dim() - 1] - energies_[0] <= tol;
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, std::string label)
    : dim_(0), kraus_(std::move(kraus)), label_(std::move(label)) {
  if (kraus_.empty()) throw DimensionMismatch("channel '" + label_ + "' has no Kraus operators");
  dim_ = static_cast<int>(kraus_.front().rows());
  for (const auto& k : kraus_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw DimensionMismatch("channel '" + label_ +
                              "' has Kraus operators of mixed shape");
    }
  }
}

CptpReport validate_cptp(const KrausChannel& channel, double tol) {
  ComplexMatrix sum = ComplexMatrix::Zero(channel.dim(), channel.dim());
  for (const auto& k : channel.kraus()) sum += k.adjoint() * k;
  CptpReport report;
  report.deficit = (sum - ComplexMatrix::Identity(channel.dim(), channel.dim())).norm();
  report.ok = report.deficit <= tol;
  return report;
}

ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& rho) {
  if (rho.rows() != channel.dim() || rho.cols() != channel.dim()) {
    throw DimensionMismatch("apply: state dimension " + std::to_string(rho.rows()) +
                            " vs channel '" + channel.label() + "' dimension " +
                            std::to_string(channel.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(channel.dim(), channel.dim());
  for (const auto& k : channel.kraus()) out += k * rho * k.adjoint();
  return out;
}

ComplexMatrix apply_composed(const KrausChannel& outer, const KrausChannel& inner,
                             const ComplexMatrix& rho) {
  return ergoswitch::apply(outer, ergoswitch::apply(inner, rho));
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  require_same_dim(outer, inner, "compose");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outer.kraus().size() * inner.kraus().size());
  for (const auto& o : outer.kraus()) {
    for (const auto& i : inner.kraus()) kraus.push_back(o * i);
  }
  return KrausChannel(std::move(kraus), outer.label() + "∘" + inner.label());
}

bool maps_commute(const KrausChannel& a, const KrausChannel& b, double tol) {
  require_same_dim(a, b, "maps_commute");
  const int d = a.dim();
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(m, n) = 1.0;
      if (max_abs(apply_composed(a, b, unit) - apply_composed(b, a, unit)) > tol) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ComplexMatrix> weyl_basis(int d) {
  if (d < 1) throw DimensionMismatch("weyl_basis: dimension must be positive");
  ComplexMatrix shift = ComplexMatrix::Zero(d, d);
  ComplexMatrix clock = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  ComplexMatrix xa = ComplexMatrix::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix u = xa;
    for (int b = 0; b < d; ++b) {
      basis.push_back(u);
      u = u * clock;
    }
    xa = shift * xa;
  }
  return basis;
}

KrausChannel identity_channel(int d) {
  return KrausChannel({ComplexMatrix::Identity(d, d)}, "identity");
}

KrausChannel depolarizing(int d) {
  if (d < 2) throw ParameterOutOfRange("depolarizing: dimension must be >= 2");
  std::vector<ComplexMatrix> kraus = weyl_basis(d);
  for (auto& k : kraus) k /= static_cast<double>(d);
  return KrausChannel(std::move(kraus), "depolarizing");
}

KrausChannel replacement(const ComplexMatrix& target, std::string label) {
  require_density_matrix(target);
  const int d = static_cast<int>(target.rows());
  const ComplexMatrix root = psd_sqrt(target);
  std::vector<ComplexMatrix> kraus = weyl_basis(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (auto& k : kraus) k = scale * root * k;
  return KrausChannel(std::move(kraus), std::move(label));
}

KrausChannel thermalizing(const Hamiltonian& h, double beta) {
  return replacement(h.gibbs(beta), "thermalizing");
}

KrausChannel gad(double p, double gamma) {
  require_unit_interval(p, "gad p");
  require_unit_interval(gamma, "gad gamma");
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);
  const double keep = std::sqrt(1.0 - gamma);
  const double jump = std::sqrt(gamma);
  ComplexMatrix a0(2, 2), a1(2, 2), a2(2, 2), a3(2, 2);
  a0 << sp, 0.0, 0.0, sp * keep;
  a1 << 0.0, sp * jump, 0.0, 0.0;
  a2 << sq * keep, 0.0, 0.0, sq;
  a3 << 0.0, 0.0, sq * jump, 0.0;
  return KrausChannel({a0, a1, a2, a3}, "gad");
}

KrausChannel phase_flip(double q) {
  require_unit_interval(q, "phase_flip q");
  ComplexMatrix b0 = std::sqrt(q) * ComplexMatrix::Identity(2, 2);
  ComplexMatrix b1(2, 2);
  b1 << std::sqrt(1.0 - q), 0.0, 0.0, -std::sqrt(1.0 - q);
  return KrausChannel({b0, b1}, "phase_flip");
}

KrausChannel unitary_channel(const ComplexMatrix& u, std::string label) {
  if (u.rows() != u.cols()) throw DimensionMismatch("unitary_channel: matrix not square");
  const auto d = u.rows();
  if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) > 1e-10) {
    throw ParameterOutOfRange("unitary_channel: matrix is not unitary");
  }
  return KrausChannel({u}, std::move(label));
}

KrausChannel x_rotation(double theta) {
  ComplexMatrix u(2, 2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  u << c, Complex(0.0, -s), Complex(0.0, -s), c;
  return unitary_channel(u, "x_rotation");
}

}  // namespace ergoswitch

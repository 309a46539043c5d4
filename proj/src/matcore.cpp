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

#include "ergoswitch/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>
#include <vector>

#include "ergoswitch/errors.hpp"

namespace ergoswitch {

namespace {

// First index whose magnitude is within 1e-12 of the column maximum.
Eigen::Index dominant_index(const ComplexVector& v) {
  const double peak = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= peak - 1e-12) return i;
  }
  return 0;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols()
       << ", expected square";
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << "hermitian_eig: max |M - M^dagger| = " << defect;
    throw NonHermitian(os.str());
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
  const Eigen::Index n = m.rows();

  // Eigen returns ascending order.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) order[static_cast<std::size_t>(k)] = n - 1 - k;

  const RealVector& values = solver.eigenvalues();
  const ComplexMatrix& vectors = solver.eigenvectors();

  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    while (end < order.size() &&
           values[order[end - 1]] - values[order[end]] <= kDegeneracyTol) {
      ++end;
    }
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](Eigen::Index a, Eigen::Index b) {
                       return dominant_index(vectors.col(a)) <
                              dominant_index(vectors.col(b));
                     });
    begin = end;
  }

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    ComplexVector v = vectors.col(src);
    const Complex lead = v[dominant_index(v)];
    v *= std::conj(lead) / std::abs(lead);
    out.eigenvalues[k] = values[src];
    out.eigenvectors.col(k) = v;
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << "hermitian_eigenvalues: max |M - M^dagger| = " << defect;
    throw NonHermitian(os.str());
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

ComplexMatrix tensor_with_qubit(const ComplexMatrix& system,
                                const ComplexMatrix& qubit) {
  require_square(system, "tensor_with_qubit");
  if (qubit.rows() != 2 || qubit.cols() != 2) {
    throw DimensionMismatch("tensor_with_qubit: control factor must be 2x2");
  }
  return Eigen::kroneckerProduct(system, qubit).eval();
}

ComplexMatrix partial_trace_q(const ComplexMatrix& joint) {
  require_square(joint, "partial_trace_q");
  if (joint.rows() % 2 != 0) {
    throw OddDimension("partial_trace_q: joint dimension " +
                       std::to_string(joint.rows()) + " is odd");
  }
  const Eigen::Index d = joint.rows() / 2;
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) {
      out(m, n) = joint(2 * m, 2 * n) + joint(2 * m + 1, 2 * n + 1);
    }
  }
  return out;
}

QubitProjection project_q(const ComplexMatrix& joint,
                          const ComplexVector& control) {
  require_square(joint, "project_q");
  if (joint.rows() % 2 != 0) {
    throw OddDimension("project_q: joint dimension " +
                       std::to_string(joint.rows()) + " is odd");
  }
  if (control.size() != 2 || std::abs(control.norm() - 1.0) > 1e-10) {
    throw ParameterOutOfRange("project_q: control vector must be a unit 2-vector");
  }
  const Eigen::Index d = joint.rows() / 2;
  // out_mn = ⟨v| J_(m·),(n·) |v⟩, the 2x2 control block sandwiched by v.
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) {
      Complex acc = 0.0;
      for (Eigen::Index l = 0; l < 2; ++l) {
        for (Eigen::Index j = 0; j < 2; ++j) {
          acc += std::conj(control[l]) * joint(2 * m + l, 2 * n + j) * control[j];
        }
      }
      out(m, n) = acc;
    }
  }
  QubitProjection result;
  result.probability = out.trace().real();
  result.unnormalized = out;
  if (result.probability > kProbabilityFloor) {
    result.state = hermitian_part(out / result.probability);
  }
  return result;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_density_matrix(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) return false;
  if (hermiticity_defect(rho) > tol) return false;
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol) return false;
  return hermitian_eigenvalues(rho).minCoeff() >= -tol;
}

void require_density_matrix(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw InvalidState("state is not a non-empty square matrix");
  }
  const double defect = hermiticity_defect(rho);
  if (defect > tol) {
    throw InvalidState("state is not Hermitian (defect " +
                       std::to_string(defect) + ")");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    throw InvalidState("state trace is " + std::to_string(tr.real()) +
                       ", expected 1");
  }
  const double low = hermitian_eigenvalues(rho).minCoeff();
  if (low < -tol) {
    throw InvalidState("state has negative eigenvalue " + std::to_string(low));
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) / 2.0;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const SpectralDecomposition spec = hermitian_eig(m);
  RealVector roots = spec.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return spec.eigenvectors * roots.cast<Complex>().asDiagonal() *
         spec.eigenvectors.adjoint();
}

}  // namespace ergoswitch

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

#include <complex>
#include <initializer_list>

#include "catch_amalgamated.hpp"
#include "ergoswitch/matcore.hpp"

namespace ergoswitch::testing {

inline ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = static_cast<Eigen::Index>(rows.begin()->size());
  ComplexMatrix out(n, m);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (const auto& x : row) out(r, c++) = x;
    ++r;
  }
  return out;
}

inline ComplexMatrix diag(std::initializer_list<double> entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  Eigen::Index k = 0;
  for (double x : entries) {
    out(k, k) = x;
    ++k;
  }
  return out;
}

inline double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace ergoswitch::testing

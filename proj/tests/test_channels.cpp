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

#include "test_support.hpp"

#include <cmath>
#include <numbers>

#include "ergoswitch/channels.hpp"
#include "ergoswitch/errors.hpp"
#include "ergoswitch/random_states.hpp"

using namespace ergoswitch;
using ergoswitch::testing::diag;
using ergoswitch::testing::distance;
using ergoswitch::testing::mat;

namespace {

// Maximum deviation between two maps over the matrix-unit basis.
double map_distance(const KrausChannel& x, const KrausChannel& y) {
  const int d = x.dim();
  double worst = 0.0;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(r, c) = 1.0;
      worst = std::max(worst, distance(ergoswitch::apply(x, unit), ergoswitch::apply(y, unit)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("validate_cptp", "[channels]") {
  CHECK(validate_cptp(phase_flip(0.3)).ok);
  CHECK(validate_cptp(thermalizing(Hamiltonian::qubit(), 1.0)).ok);

  const KrausChannel half({0.5 * ComplexMatrix::Identity(2, 2)}, "half");
  const CptpReport report = validate_cptp(half);
  CHECK_FALSE(report.ok);
  CHECK(report.deficit == Catch::Approx(0.75 * std::sqrt(2.0)));
}

TEST_CASE("apply", "[channels]") {
  Rng rng(21);
  const ComplexMatrix rho = random_density_matrix(rng, 2);

  CHECK(distance(ergoswitch::apply(identity_channel(2), rho), rho) < 1e-15);
  CHECK(distance(ergoswitch::apply(depolarizing(2), random_pure_state(rng, 2)), diag({0.5, 0.5})) < 1e-15);

  const double beta = 0.8;
  const double z = 1.0 + std::exp(-beta);
  CHECK(distance(ergoswitch::apply(thermalizing(Hamiltonian::qubit(), beta), rho),
                 diag({1.0 / z, std::exp(-beta) / z})) < 1e-12);

  CHECK_THROWS_AS(ergoswitch::apply(identity_channel(3), rho), DimensionMismatch);
}

TEST_CASE("compose", "[channels]") {
  Rng rng(22);
  SECTION("identity on the outside leaves the map unchanged") {
    const KrausChannel c = random_zoo_channel(rng, 2);
    CHECK(map_distance(compose(identity_channel(2), c), c) < 1e-10);
  }
  SECTION("Kraus order is row-major in (outer, inner)") {
    const KrausChannel a = gad(0.3, 0.4);
    const KrausChannel b = phase_flip(0.2);
    const KrausChannel ab = compose(a, b);
    REQUIRE(ab.kraus().size() == 8);
    CHECK(distance(ab.kraus()[1 * 2 + 1], a.kraus()[1] * b.kraus()[1]) < 1e-15);
  }
  SECTION("two phase flips shrink coherence by (2q - 1)^2") {
    const double q = 0.3;
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    ComplexMatrix expected = rho;
    expected(0, 1) *= (2 * q - 1) * (2 * q - 1);
    expected(1, 0) *= (2 * q - 1) * (2 * q - 1);
    CHECK(distance(ergoswitch::apply(compose(phase_flip(q), phase_flip(q)), rho), expected) < 1e-12);
  }
  SECTION("amplitude damping after a phase flip") {
    const double p = 0.3, gamma = 0.45, q = 0.2;
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    ComplexMatrix expected = (1 - gamma) * diag({rho(0, 0).real(), rho(1, 1).real()}) +
                             gamma * diag({p, 1 - p});
    expected(0, 1) = -(1 - 2 * q) * std::sqrt(1 - gamma) * rho(0, 1);
    expected(1, 0) = std::conj(expected(0, 1));
    CHECK(distance(ergoswitch::apply(compose(gad(p, gamma), phase_flip(q)), rho), expected) < 1e-12);
  }
  SECTION("associativity on the operator basis") {
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 2 + rng.index(2);
      const KrausChannel a = random_zoo_channel(rng, d);
      const KrausChannel b = random_zoo_channel(rng, d);
      const KrausChannel c = random_zoo_channel(rng, d);
      CHECK(map_distance(compose(compose(a, b), c), compose(a, compose(b, c))) < 1e-10);
    }
  }
  SECTION("dimension mismatch") {
    CHECK_THROWS_AS(compose(identity_channel(2), identity_channel(3)), DimensionMismatch);
  }
}

TEST_CASE("maps_commute", "[channels]") {
  CHECK(maps_commute(depolarizing(2), depolarizing(2)));
  CHECK(maps_commute(gad(0.3, 0.6), phase_flip(0.25)));
  // Evaluate both orders on |0><0| by hand: the rotation moves population
  // that the damping then relaxes differently.
  const KrausChannel a = gad(0.3, 0.5);
  const KrausChannel r = x_rotation(0.9);
  const ComplexMatrix ground = diag({1.0, 0.0});
  CHECK(distance(apply_composed(a, r, ground), apply_composed(r, a, ground)) > 1e-3);
  CHECK_FALSE(maps_commute(a, r));
}

TEST_CASE("depolarizing", "[channels]") {
  Rng rng(23);
  for (int d = 2; d <= 5; ++d) {
    const KrausChannel dep = depolarizing(d);
    CHECK(dep.kraus().size() == static_cast<std::size_t>(d * d));
    CHECK(validate_cptp(dep).ok);
    const ComplexMatrix out = ergoswitch::apply(dep, random_density_matrix(rng, d));
    CHECK(distance(out, ComplexMatrix::Identity(d, d) / d) < 1e-12);
  }
  CHECK_THROWS_AS(depolarizing(1), ParameterOutOfRange);
}

TEST_CASE("weyl basis is orthogonal and in X^a Z^b order", "[channels]") {
  for (int d = 2; d <= 4; ++d) {
    const auto basis = weyl_basis(d);
    REQUIRE(basis.size() == static_cast<std::size_t>(d * d));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Complex overlap = (basis[i].adjoint() * basis[j]).trace();
        CHECK(std::abs(overlap - (i == j ? Complex(d) : Complex(0.0))) < 1e-12);
      }
    }
  }
  // U_{0,1} = Z and U_{1,0} = X for a qubit.
  const auto qubit = weyl_basis(2);
  CHECK(distance(qubit[1], diag({1.0, -1.0})) < 1e-15);
  CHECK(distance(qubit[2], mat({{0.0, 1.0}, {1.0, 0.0}})) < 1e-15);
}

TEST_CASE("thermalizing", "[channels]") {
  Rng rng(24);
  const Hamiltonian h = Hamiltonian::qubit();
  CHECK(distance(ergoswitch::apply(thermalizing(h, 0.0), random_density_matrix(rng, 2)),
                 diag({0.5, 0.5})) < 1e-12);

  const ComplexMatrix out = ergoswitch::apply(thermalizing(h, 1.0), random_density_matrix(rng, 2));
  CHECK(out(0, 0).real() == Catch::Approx(0.7310585786).epsilon(1e-9));
  CHECK(out(1, 1).real() == Catch::Approx(0.2689414214).epsilon(1e-9));

  for (double beta : {0.0, 0.5, 1.0, 5.0}) CHECK(validate_cptp(thermalizing(h, beta)).ok);

  SECTION("output does not depend on the input") {
    const Hamiltonian h3 = random_hamiltonian(rng, 3);
    const KrausChannel t = thermalizing(h3, 1.3);
    const ComplexMatrix a = ergoswitch::apply(t, random_density_matrix(rng, 3));
    const ComplexMatrix b = ergoswitch::apply(t, random_density_matrix(rng, 3));
    CHECK(distance(a, b) < 1e-10);
    CHECK(distance(a, h3.gibbs(1.3)) < 1e-10);
  }
  CHECK_THROWS_AS(thermalizing(h, -1.0), ParameterOutOfRange);
}

TEST_CASE("amplitude damping and phase flip", "[channels]") {
  Rng rng(25);
  CHECK(map_distance(gad(0.4, 0.0), identity_channel(2)) < 1e-12);
  CHECK(map_distance(phase_flip(1.0), identity_channel(2)) < 1e-12);

  for (double p : {0.5, 0.7, 1.0}) {
    const KrausChannel therm = compose(gad(p, 1.0), phase_flip(0.35));
    const ComplexMatrix out = ergoswitch::apply(therm, random_density_matrix(rng, 2));
    CHECK(distance(out, diag({p, 1.0 - p})) < 1e-12);
  }

  const KrausChannel a = gad(0.25, 0.36);
  REQUIRE(a.kraus().size() == 4);
  CHECK(distance(a.kraus()[0], std::sqrt(0.25) * diag({1.0, 0.8})) < 1e-15);
  CHECK(distance(a.kraus()[1], std::sqrt(0.25) * mat({{0.0, 0.6}, {0.0, 0.0}})) < 1e-15);
  CHECK(distance(a.kraus()[2], std::sqrt(0.75) * diag({0.8, 1.0})) < 1e-15);
  CHECK(distance(a.kraus()[3], std::sqrt(0.75) * mat({{0.0, 0.0}, {0.6, 0.0}})) < 1e-15);

  CHECK_THROWS_AS(gad(1.5, 0.2), ParameterOutOfRange);
  CHECK_THROWS_AS(gad(0.5, -0.1), ParameterOutOfRange);
  CHECK_THROWS_AS(phase_flip(2.0), ParameterOutOfRange);
}

TEST_CASE("channel outputs are states", "[channels]") {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + rng.index(3);
    const KrausChannel c = random_zoo_channel(rng, d);
    CHECK(validate_cptp(c).ok);
    const ComplexMatrix out = ergoswitch::apply(c, random_density_matrix(rng, d));
    CHECK(std::abs(out.trace().real() - 1.0) < 1e-12);
    CHECK(hermiticity_defect(out) < 1e-12);
    CHECK(hermitian_eigenvalues(hermitian_part(out)).minCoeff() > -1e-10);
  }
}

TEST_CASE("Hamiltonian", "[channels]") {
  const Hamiltonian h = Hamiltonian::diagonal({2.0, 0.0, 1.0});
  CHECK(h.energies()(0) == 0.0);
  CHECK(h.energies()(1) == 1.0);
  CHECK(h.energies()(2) == 2.0);
  CHECK(distance(h.matrix(), diag({2.0, 0.0, 1.0})) < 1e-15);
  // Populations are read in ascending-energy order.
  const ComplexMatrix local = h.to_energy_basis(diag({0.5, 0.2, 0.3}));
  CHECK(local(0, 0).real() == Catch::Approx(0.2));
  CHECK(local(2, 2).real() == Catch::Approx(0.5));
  CHECK(distance(h.from_energy_basis(local), diag({0.5, 0.2, 0.3})) < 1e-15);

  CHECK(Hamiltonian::diagonal({0.7, 0.7}).fully_degenerate());
  CHECK_FALSE(Hamiltonian::qubit().fully_degenerate());
  CHECK_THROWS_AS(Hamiltonian::qubit().gibbs(-0.5), ParameterOutOfRange);
  CHECK_THROWS_AS(h.to_energy_basis(diag({0.5, 0.5})), DimensionMismatch);

  const Hamiltonian rotated = Hamiltonian::from_matrix(mat({{0.5, 0.5}, {0.5, 0.5}}));
  CHECK(rotated.energies()(0) == Catch::Approx(0.0).margin(1e-14));
  CHECK(rotated.energies()(1) == Catch::Approx(1.0));
}

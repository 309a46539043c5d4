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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <path-to-ergoswitch-cli>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ergoswitch/channels.hpp"
#include "ergoswitch/ergotropy.hpp"
#include "ergoswitch/optimizer.hpp"
#include "ergoswitch/parallel.hpp"
#include "ergoswitch/random_states.hpp"
#include "ergoswitch/runner.hpp"
#include "ergoswitch/scenarios.hpp"
#include "ergoswitch/zero_gain.hpp"

namespace {

using namespace ergoswitch;
namespace fs = std::filesystem;

// Pinned tolerances.
constexpr double kTol = 1e-10;
constexpr double kPureTol = 1e-12;
constexpr double kActivationFloor = 1e-12;
constexpr double kStrictGain = 1e-8;
constexpr double kOptimizedZero = 1e-8;
constexpr double kJump = 1e-2;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

const ControlSpec kHalf(0.5, 0.0);
const MeasureSpec kPlus(0.5, 0.0);

// Inline qubit quantities so the criteria do not lean on library oracles.
double imbalance(const ComplexMatrix& rho) { return (rho(1, 1) - rho(0, 0)).real(); }

Outcome criterion_1() {
  Rng rng(101);
  const Hamiltonian h = Hamiltonian::qubit();
  const KrausChannel dep = depolarizing(2);
  double worst_pure = 0.0, worst_mixed = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix psi = random_pure_state(rng, 2);
    worst_pure = std::max(worst_pure,
                          std::abs(daemonic_ergotropy(dep, dep, psi, kHalf, kPlus, h).daemonic.total - 0.125));
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const double d = imbalance(rho);
    const double expected = std::sqrt(d * d + 4 * std::norm(rho(0, 1))) / 8.0;
    worst_mixed = std::max(
        worst_mixed, std::abs(daemonic_ergotropy(dep, dep, rho, kHalf, kPlus, h).daemonic.total - expected));
  }
  return {worst_pure <= kTol && worst_mixed <= kTol,
          "pure max err " + sci(worst_pure) + ", mixed max err " + sci(worst_mixed)};
}

Outcome criterion_2() {
  Rng rng(102);
  double worst = 0.0, worst_pure = 0.0;
  for (int d : {3, 4}) {
    const KrausChannel dep = depolarizing(d);
    for (int k = 0; k < 50; ++k) {
      const Hamiltonian h = random_hamiltonian(rng, d);
      const ComplexMatrix rho = random_density_matrix(rng, d);
      std::vector<double> r(d);
      const RealVector ev = hermitian_eigenvalues(rho);
      for (int i = 0; i < d; ++i) r[i] = ev(i);
      // r descending; ascending energies pair with ascending minus descending eigenvalues.
      std::sort(r.begin(), r.end(), std::greater<>());
      double expected = 0.0;
      for (int i = 0; i < d; ++i) expected += h.energies()(i) * (r[d - 1 - i] - r[i]);
      expected /= 2.0 * d * d;
      worst = std::max(worst,
                       std::abs(daemonic_ergotropy(dep, dep, rho, kHalf, kPlus, h).daemonic.total - expected));

      const ComplexMatrix psi = random_pure_state(rng, d);
      const double pure = (h.energies()(d - 1) - h.energies()(0)) / (2.0 * d * d);
      worst_pure = std::max(
          worst_pure, std::abs(daemonic_ergotropy(dep, dep, psi, kHalf, kPlus, h).daemonic.total - pure));
    }
  }
  return {worst <= kTol && worst_pure <= kPureTol,
          "mixed max err " + sci(worst) + ", pure max err " + sci(worst_pure)};
}

Outcome criterion_3() {
  Rng rng(103);
  const Hamiltonian h = Hamiltonian::qubit();
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double beta = rng.uniform(0.0, 4.0);
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const double z = 1.0 + std::exp(-beta);
    ComplexMatrix gibbs = ComplexMatrix::Zero(2, 2);
    gibbs(0, 0) = 1.0 / z;
    gibbs(1, 1) = std::exp(-beta) / z;
    const KrausChannel t = thermalizing(h, beta);
    worst = std::max(worst, max_abs(cross_map(t, t, rho) - gibbs * rho * gibbs));
  }
  return {worst <= kTol, "max err " + sci(worst)};
}

Outcome criterion_4() {
  const Hamiltonian h = Hamiltonian::qubit();
  int mismatches = 0;
  double boundary_max = 0.0;
  int active = 0;
  for (int i = 0; i < 50; ++i) {
    const double beta = i / 16.0;
    const KrausChannel t = thermalizing(h, beta);
    for (int j = 0; j < 50; ++j) {
      const double beta_in = j / 16.0;
      const double wd = daemonic_ergotropy(t, t, h.gibbs(beta_in), kHalf, kPlus, h).daemonic.total;
      const bool predicted = beta_in > 2 * beta;
      if ((wd > kActivationFloor) != predicted) ++mismatches;
      if (predicted) ++active;
      if (j == 2 * i) boundary_max = std::max(boundary_max, wd);
    }
  }
  return {mismatches == 0 && boundary_max <= kTol,
          std::to_string(mismatches) + " mismatches over 2500 cells (" + std::to_string(active) +
              " active), boundary max WD " + sci(boundary_max)};
}

Outcome criterion_5() {
  Rng rng(105);
  const Hamiltonian h = Hamiltonian::qubit();
  const KrausChannel t0 = thermalizing(h, 0.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double delta = rng.uniform(-1.0, 1.0);
    const double cmax = 0.5 * std::sqrt(1.0 - delta * delta);
    const ComplexMatrix rho = qubit_state(delta, cmax * rng.uniform(), rng.uniform(0.0, 6.0));
    const double wd_i = daemonic_ergotropy(t0, t0, rho, kHalf, kPlus, h).daemonic.incoherent;
    worst = std::max(worst, std::abs(wd_i - std::abs(delta) / 8.0));
  }
  double worst_input = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double beta = rng.uniform(0.0, 3.0);
    const double beta_in = rng.uniform(0.0, 6.0);
    const KrausChannel t = thermalizing(h, beta);
    const double eb = std::exp(-beta), ei = std::exp(-beta_in);
    const double closed = std::max(0.0, (eb * eb - ei) / (2 * (1 + eb) * (1 + eb) * (1 + ei)));
    const double wd = daemonic_ergotropy(t, t, h.gibbs(beta_in), kHalf, kPlus, h).daemonic.total;
    worst_input = std::max(worst_input, std::abs(wd - closed));
  }
  return {worst <= kTol && worst_input <= kTol,
          "beta=0 max err " + sci(worst) + ", thermal-input max err " + sci(worst_input)};
}

Outcome criterion_6() {
  const Hamiltonian h = Hamiltonian::qubit();
  const AdpfParams params{0.5, 1.0 / 3.0, 0.0};
  const auto [a, b] = adpf_channels(params);
  double inside_max = 0.0;
  const int n = 1001;
  for (int k = 0; k < n; ++k) {
    const double delta = -1.0 / 9.0 + (1.0 / 3.0 + 1.0 / 9.0) * k / (n - 1);
    for (double frac : {1.0, 0.5, 0.0}) {
      const double cmax = 0.5 * std::sqrt(std::max(0.0, 1.0 - delta * delta));
      const ComplexMatrix rho = qubit_state(delta, frac * cmax);
      inside_max = std::max(inside_max,
                            std::abs(daemonic_ergotropy(a, b, rho, kHalf, kPlus, h).gain.incoherent));
    }
  }
  double outside_min = 1.0;
  for (double delta : {-0.5, 0.9}) {
    const ComplexMatrix rho = maximally_coherent_qubit(delta);
    outside_min = std::min(outside_min, daemonic_ergotropy(a, b, rho, kHalf, kPlus, h).gain.incoherent);
  }
  const double trivial = std::abs(
      daemonic_ergotropy(a, b, maximally_coherent_qubit(1.0 / 3.0), kHalf, kPlus, h).gain.total);
  return {inside_max <= kTol && outside_min > kStrictGain && trivial <= kTol,
          "window max |dW_i| " + sci(inside_max) + ", outside min dW_i " + sci(outside_min) +
              ", |dW| at 1-2p " + sci(trivial)};
}

struct CliOutput {
  int status = -1;
  std::string out;
};

CliOutput run_cli(const std::string& cli, const std::string& args) {
  CliOutput result;
  FILE* pipe = popen((cli + " " + args + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

Outcome criterion_7(const std::string& cli, const std::string& config_dir) {
  const fs::path dir = fs::temp_directory_path() / "ergoswitch_acceptance_adpf";
  fs::remove_all(dir);
  const CliOutput run = run_cli(cli, "run " + config_dir + "/adpf_sweep.ini --out " + dir.string());
  if (run.status != 0) return {false, "CLI exited with " + std::to_string(run.status)};

  std::ifstream in(dir / "results.csv");
  std::string line;
  std::getline(in, line);
  std::map<std::string, std::size_t> col;
  {
    std::istringstream header(line);
    std::string name;
    for (std::size_t c = 0; std::getline(header, name, ','); ++c) col[name] = c;
  }
  for (const char* needed : {"delta_rho", "dW", "dW_c", "in_window"}) {
    if (col.count(needed) == 0) return {false, std::string("missing column ") + needed};
  }
  int rows = 0, window_rows = 0;
  double window_defect = 0.0, min_dw = 0.0, max_jump = 0.0, prev = 0.0;
  while (std::getline(in, line)) {
    std::vector<double> v;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) v.push_back(std::stod(cell));
    const double dw = v[col["dW"]];
    if (v[col["in_window"]] == 1.0) {
      ++window_rows;
      window_defect = std::max(window_defect, std::abs(dw - v[col["dW_c"]]));
    }
    min_dw = std::min(min_dw, dw);
    if (rows > 0) max_jump = std::max(max_jump, std::abs(dw - prev));
    prev = dw;
    ++rows;
  }
  fs::remove_all(dir);
  const bool ok = rows >= 401 && window_rows > 0 && window_defect <= kTol && min_dw >= -kTol &&
                  max_jump < kJump;
  return {ok, std::to_string(rows) + " rows, window |dW - dW_c| " + sci(window_defect) +
                  ", min dW " + sci(min_dw) + ", max jump " + sci(max_jump)};
}

Outcome criterion_8() {
  Rng rng(108);
  const Hamiltonian h = Hamiltonian::qubit();
  double min_total = 0.0, min_inc = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const KrausChannel a = random_zoo_channel(rng, 2);
    const KrausChannel b = random_zoo_channel(rng, 2);
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const ControlSpec c = random_control(rng);
    const MeasureSpec m = random_measure(rng);
    const DaemonicReport r = daemonic_ergotropy(a, b, rho, c, m, h);
    min_total = std::min(min_total, r.gain.total);
    min_inc = std::min(min_inc, r.gain.incoherent);
  }
  return {min_total >= -kTol && min_inc >= -kTol,
          "min dW " + sci(min_total) + ", min dW_i " + sci(min_inc)};
}

Outcome criterion_9() {
  Rng rng(109);
  double worst_state = 0.0, worst_gain = 0.0;
  int cases = 0;
  for (int d : {2, 3}) {
    const Hamiltonian h = random_hamiltonian(rng, d);
    std::vector<KrausChannel> zoo = {identity_channel(d), depolarizing(d),
                                     thermalizing(h, rng.uniform(0.0, 2.0)),
                                     replacement(random_density_matrix(rng, d)),
                                     unitary_channel(random_unitary(rng, d))};
    if (d == 2) {
      zoo.push_back(gad(rng.uniform(), rng.uniform()));
      zoo.push_back(phase_flip(rng.uniform()));
      zoo.push_back(x_rotation(rng.uniform(0.0, 6.0)));
    }
    const KrausChannel id = identity_channel(d);
    for (const auto& b : zoo) {
      for (int k = 0; k < 10; ++k) {
        const ComplexMatrix rho = random_density_matrix(rng, d);
        const ControlSpec c = random_control(rng);
        const MeasureSpec m = random_measure(rng);
        const ConditionalPair pair = conditional_states(id, b, rho, c, m);
        const ComplexMatrix classical = classical_output(id, b, rho, c.phi());
        if (pair.rho_plus) worst_state = std::max(worst_state, max_abs(*pair.rho_plus - classical));
        if (pair.rho_minus) worst_state = std::max(worst_state, max_abs(*pair.rho_minus - classical));
        worst_gain = std::max(worst_gain, std::abs(daemonic_ergotropy(id, b, rho, c, m, h).gain.total));
        ++cases;
      }
    }
  }
  return {worst_state <= kTol && worst_gain <= kTol,
          std::to_string(cases) + " cases, state max err " + sci(worst_state) + ", max |dW| " +
              sci(worst_gain)};
}

struct ZeroInstance {
  KrausChannel a;
  KrausChannel b;
  ComplexMatrix rho;
  ControlSpec control;
  MeasureSpec measure;
  Hamiltonian h;
};

// Mix of generic pairs and families where zero gain is common.
ZeroInstance zero_instance(Rng& rng) {
  const int family = rng.index(4);
  const int d = 2 + rng.index(2);
  ZeroInstance z{identity_channel(d), identity_channel(d), random_density_matrix(rng, d),
                 random_control(rng), random_measure(rng), random_hamiltonian(rng, d)};
  switch (family) {
    case 0:
      z.a = random_zoo_channel(rng, d);
      z.b = random_zoo_channel(rng, d);
      break;
    case 1:
      z.b = random_zoo_channel(rng, d);
      break;
    case 2: {
      z.a = random_zoo_channel(rng, d);
      z.b = random_zoo_channel(rng, d);
      const double e = rng.uniform();
      z.h = Hamiltonian::diagonal(std::vector<double>(d, e));
      break;
    }
    default: {
      const AdpfParams params{rng.uniform(), rng.uniform(), rng.uniform()};
      const auto pair = adpf_channels(params);
      z.a = pair.first;
      z.b = pair.second;
      z.rho = maximally_coherent_qubit(1.0 - 2.0 * params.p);
      z.h = Hamiltonian::qubit();
      z.control = ControlSpec(0.5, 0.0);
      break;
    }
  }
  return z;
}

Outcome criterion_10() {
  Rng rng(110);
  std::vector<ZeroInstance> instances;
  for (int k = 0; k < 500; ++k) instances.push_back(zero_instance(rng));

  struct Row {
    bool predicted = false;
    double checked_gain = 0.0;
  };
  std::vector<Row> rows(instances.size());
  parallel_for(instances.size(), [&](std::size_t k) {
    const ZeroInstance& z = instances[k];
    if (k % 2 == 0) {
      // Checker at the optimizer's basis: the literal "optimized dW" test.
      const DaemonicEvaluator ev(z.a, z.b, z.rho, z.control, z.h);
      const OptimizationResult opt = optimize_measurement(ev);
      rows[k].predicted =
          zero_gain_check(z.a, z.b, z.rho, z.control, opt.measure, z.h).predicted_zero;
      rows[k].checked_gain = opt.report.gain.total;
    } else {
      rows[k].predicted = zero_gain_check(z.a, z.b, z.rho, z.control, z.measure, z.h).predicted_zero;
      rows[k].checked_gain = daemonic_ergotropy(z.a, z.b, z.rho, z.control, z.measure, z.h).gain.total;
    }
  });
  int predicted = 0, violations = 0;
  for (const auto& r : rows) {
    if (!r.predicted) continue;
    ++predicted;
    if (r.checked_gain > kOptimizedZero) ++violations;
  }

  // Thermal pair on Gibbs inputs at the balanced basis.
  const Hamiltonian h = Hamiltonian::qubit();
  int family = 0, disagreements = 0;
  for (int i = 0; i < 8; ++i) {
    const double beta = 0.25 * i;
    const KrausChannel t = thermalizing(h, beta);
    for (int j = 0; j < 16; ++j) {
      const double beta_in = 0.25 * j;
      const ComplexMatrix rho = h.gibbs(beta_in);
      const bool zero = zero_gain_check(t, t, rho, kHalf, kPlus, h).predicted_zero;
      const double opt = optimize_measurement(t, t, rho, kHalf, h).report.gain.total;
      if (zero != (opt <= kOptimizedZero)) ++disagreements;
      ++family;
    }
  }
  const bool ok = violations == 0 && predicted > 0 && disagreements == 0;
  return {ok, std::to_string(predicted) + "/500 predicted zero, " + std::to_string(violations) +
                  " violations; thermal family " + std::to_string(disagreements) + "/" +
                  std::to_string(family) + " disagreements"};
}

Outcome criterion_11() {
  Rng rng(111);
  const Hamiltonian h = Hamiltonian::qubit();
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix rho = random_density_matrix(rng, 2, 1 + rng.index(2));
    const double delta = imbalance(rho);
    const double purity = (rho * rho).trace().real();
    const double eta = std::sqrt(std::max(0.0, 2 * purity - 1));
    const double c2 = std::norm(rho(0, 1));
    const double w_i = std::max(0.0, delta);
    const double w_c = 0.5 * (eta - std::sqrt(std::max(0.0, eta * eta - 4 * c2)));
    const WorkSplit s = split_ergotropy(rho, h).work;
    worst = std::max({worst, std::abs(s.incoherent - w_i), std::abs(s.coherent - w_c)});
  }
  double ledger = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int d = 2 + rng.index(4);
    const WorkSplit s = split_ergotropy(random_density_matrix(rng, d), random_hamiltonian(rng, d)).work;
    ledger = std::max(ledger, std::abs(s.total - s.incoherent - s.coherent));
  }
  return {worst <= kTol && ledger <= kTol,
          "closed-form max err " + sci(worst) + ", ledger max defect " + sci(ledger)};
}

Outcome criterion_12(const std::string& cli) {
  const CliOutput first = run_cli(cli, "verify all --seed 42");
  const CliOutput second = run_cli(cli, "verify all --seed 42");
  const bool identical = first.out == second.out && !first.out.empty();
  return {identical && first.status == second.status,
          std::string(identical ? "byte-identical" : "reports differ") + " (" +
              std::to_string(first.out.size()) + " bytes, exit " + std::to_string(first.status) + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <ergoswitch-cli> <config-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string config_dir = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"depolarizing qubit daemonic ergotropy", criterion_1},
      {"depolarizing d-dimensional daemonic ergotropy", criterion_2},
      {"thermal cross-map", criterion_3},
      {"thermal activation map", criterion_4},
      {"thermal incoherent normalization", criterion_5},
      {"amplitude damping window", criterion_6},
      {"sweep structure from CLI CSV", [&] { return criterion_7(cli, config_dir); }},
      {"gain non-negativity", criterion_8},
      {"identity-paired collapse", criterion_9},
      {"zero-gain checker soundness", criterion_10},
      {"qubit split closed form and ledger", criterion_11},
      {"verify determinism", [&] { return criterion_12(cli); }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}

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

#include "ergoswitch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <nlohmann/json.hpp>

#include "ergoswitch/errors.hpp"
#include "ergoswitch/parallel.hpp"
#include "ergoswitch/qubit_gain.hpp"
#include "ergoswitch/random_states.hpp"
#include "ergoswitch/runner.hpp"
#include "ergoswitch/scenarios.hpp"

namespace ergoswitch {

namespace {

constexpr double kTight = 1e-10;

// Each check draws from its own stream so a suite gives the same numbers
// whether it runs alone or inside "all".
std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

// Runs `cases` independent trials in parallel; each trial gets a generator
// seeded from (stream, index) and returns its violation.
double max_over(std::uint64_t stream, int cases,
                const std::function<double(Rng&, int)>& trial) {
  std::vector<double> values(cases, 0.0);
  parallel_for(cases, [&](std::size_t k) {
    Rng rng(stream + 0x9E3779B97F4A7C15ULL * (k + 1));
    values[k] = trial(rng, static_cast<int>(k));
  });
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::isnan(v) ? INFINITY : v);
  return worst;
}

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed, std::vector<VerifyCheck>& out)
      : name_(std::move(name)), seed_(seed), out_(out) {}

  void check(const std::string& name, int cases, double tolerance,
             const std::function<double(Rng&, int)>& trial) {
    VerifyCheck c;
    c.suite = name_;
    c.name = name;
    c.cases = cases;
    c.tolerance = tolerance;
    c.value = max_over(stream_seed(seed_, name_ + "/" + name), cases, trial);
    c.passed = c.value <= tolerance;
    out_.push_back(c);
  }

 private:
  std::string name_;
  std::uint64_t seed_;
  std::vector<VerifyCheck>& out_;
};

int random_dim(Rng& rng) { return 2 + rng.index(2); }

double cptp_deficit(const KrausChannel& c) { return validate_cptp(c).deficit; }

void cptp_suite(Suite& s) {
  s.check("zoo_fixed", 1, 1e-9, [](Rng&, int) {
    std::vector<KrausChannel> zoo;
    for (int d = 2; d <= 5; ++d) {
      zoo.push_back(identity_channel(d));
      zoo.push_back(depolarizing(d));
    }
    for (double beta : {0.0, 0.5, 1.0, 5.0}) {
      zoo.push_back(thermalizing(Hamiltonian::qubit(), beta));
      zoo.push_back(thermalizing(Hamiltonian::diagonal({0.0, 0.4, 1.3}), beta));
    }
    for (double p : {0.0, 0.3, 0.5, 1.0}) {
      for (double g : {0.0, 0.5, 1.0}) zoo.push_back(gad(p, g));
    }
    for (double q : {0.0, 0.3, 1.0}) zoo.push_back(phase_flip(q));
    zoo.push_back(x_rotation(0.7));
    double worst = 0.0;
    for (const auto& c : zoo) worst = std::max(worst, cptp_deficit(c));
    return worst;
  });
  s.check("zoo_random", 200, 1e-9, [](Rng& rng, int) {
    return cptp_deficit(random_zoo_channel(rng, 2 + rng.index(3)));
  });
  s.check("switch_completeness", 100, 1e-9, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = random_zoo_channel(rng, d);
    const KrausChannel b = random_zoo_channel(rng, d);
    ComplexMatrix sum = ComplexMatrix::Zero(2 * d, 2 * d);
    for (const auto& k : switch_kraus(a, b)) sum += k.adjoint() * k;
    return (sum - ComplexMatrix::Identity(2 * d, 2 * d)).norm();
  });
  s.check("apply_preserves_states", 200, kTight, [](Rng& rng, int) {
    const int d = 2 + rng.index(3);
    const KrausChannel c = random_zoo_channel(rng, d);
    const ComplexMatrix out = ergoswitch::apply(c, random_density_matrix(rng, d));
    const double min_eig = hermitian_eigenvalues(hermitian_part(out)).minCoeff();
    return std::max({std::abs(out.trace().real() - 1.0), hermiticity_defect(out),
                     std::max(0.0, -min_eig)});
  });
}

void switch_suite(Suite& s) {
  s.check("block_consistency", 200, kTight, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = random_zoo_channel(rng, d);
    const KrausChannel b = random_zoo_channel(rng, d);
    const ComplexMatrix rho = random_density_matrix(rng, d);
    const ControlSpec c = random_control(rng);
    const ComplexMatrix joint = switch_apply(a, b, rho, c);
    const ComplexMatrix ab = apply_composed(a, b, rho);
    const ComplexMatrix ba = apply_composed(b, a, rho);
    const Complex coh = std::polar(std::sqrt(c.phi() * (1.0 - c.phi())), -c.alpha());
    const ComplexMatrix chi = cross_map(a, b, rho);
    double worst = 0.0;
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        worst = std::max({worst, std::abs(joint(2 * m, 2 * n) - c.phi() * ab(m, n)),
                          std::abs(joint(2 * m + 1, 2 * n + 1) - (1.0 - c.phi()) * ba(m, n)),
                          std::abs(joint(2 * m, 2 * n + 1) - coh * chi(m, n))});
      }
    }
    return worst;
  });
  s.check("probabilities_sum_to_one", 200, kTight, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = random_zoo_channel(rng, d);
    const KrausChannel b = random_zoo_channel(rng, d);
    const ComplexMatrix rho = random_density_matrix(rng, d);
    const ControlSpec c = random_control(rng);
    const ConditionalPair pair = conditional_states(a, b, rho, c, random_measure(rng));
    return std::abs(pair.p_plus + pair.p_minus - 1.0);
  });
  s.check("gain_operator_identity", 200, kTight, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = random_zoo_channel(rng, d);
    const KrausChannel b = random_zoo_channel(rng, d);
    const ComplexMatrix rho = random_density_matrix(rng, d);
    const ControlSpec c = random_control(rng);
    const MeasureSpec m = random_measure(rng);
    const ConditionalPair pair = conditional_states(a, b, rho, c, m);
    const ComplexMatrix half = 0.5 * classical_output(a, b, rho, c.phi());
    const ComplexMatrix g = gain_operator(a, b, rho, c, m);
    return std::max(max_abs(pair.weighted_plus - (half + g)),
                    max_abs(pair.weighted_minus - (half - g)));
  });
  s.check("cross_map_decomposition", 200, kTight, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = random_zoo_channel(rng, d);
    const KrausChannel b = random_zoo_channel(rng, d);
    const ComplexMatrix rho = random_density_matrix(rng, d);
    const ComplexMatrix chi = cross_map(a, b, rho);
    const ComplexMatrix ab = apply_composed(a, b, rho);
    return std::max(
        max_abs(chi - (ab + chi_nc(a, b, rho, KrausBracket::Commutator))),
        max_abs(chi - (-ab + chi_nc(a, b, rho, KrausBracket::Anticommutator))));
  });
  s.check("kraus_commuting_collapse", 200, kTight, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = identity_channel(d);
    const KrausChannel b = random_zoo_channel(rng, d);
    const ComplexMatrix rho = random_density_matrix(rng, d);
    const ControlSpec c = random_control(rng);
    const ConditionalPair pair = conditional_states(a, b, rho, c, random_measure(rng));
    const ComplexMatrix classical = classical_output(a, b, rho, c.phi());
    double worst = 0.0;
    if (pair.rho_plus) worst = std::max(worst, max_abs(*pair.rho_plus - classical));
    if (pair.rho_minus) worst = std::max(worst, max_abs(*pair.rho_minus - classical));
    return worst;
  });
}

void ergotropy_suite(Suite& s) {
  s.check("ledger_closure", 500, kTight, [](Rng& rng, int) {
    const int d = 2 + rng.index(3);
    const ErgotropyReport r =
        split_ergotropy(random_density_matrix(rng, d, 1 + rng.index(d)), random_hamiltonian(rng, d));
    return std::abs(r.work.total - r.work.incoherent - r.work.coherent);
  });
  s.check("passive_state_is_passive", 200, 0.0, [](Rng& rng, int) {
    const int d = 2 + rng.index(3);
    const Hamiltonian h = random_hamiltonian(rng, d);
    return is_passive(passive_state(random_density_matrix(rng, d), h), h) ? 0.0 : 1.0;
  });
  s.check("qubit_split_closed_form", 1000, kTight, [](Rng& rng, int) {
    const ComplexMatrix rho = random_density_matrix(rng, 2, 1 + rng.index(2));
    const WorkSplit closed = qubit::split_closed_form(rho);
    const WorkSplit numeric = split_ergotropy(rho, Hamiltonian::qubit()).work;
    return std::max({std::abs(closed.total - numeric.total),
                     std::abs(closed.incoherent - numeric.incoherent),
                     std::abs(closed.coherent - numeric.coherent)});
  });
  s.check("gain_non_negative", 1000, kTight, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = random_zoo_channel(rng, d);
    const KrausChannel b = random_zoo_channel(rng, d);
    const ComplexMatrix rho = random_density_matrix(rng, d);
    const ControlSpec c = random_control(rng);
    const DaemonicReport r =
        daemonic_ergotropy(a, b, rho, c, random_measure(rng), random_hamiltonian(rng, d));
    return std::max({0.0, -r.gain.total, -r.gain.incoherent});
  });
  s.check("daemonic_ledger", 500, kTight, [](Rng& rng, int) {
    const int d = random_dim(rng);
    const KrausChannel a = random_zoo_channel(rng, d);
    const KrausChannel b = random_zoo_channel(rng, d);
    const ComplexMatrix rho = random_density_matrix(rng, d);
    const ControlSpec c = random_control(rng);
    const DaemonicReport r =
        daemonic_ergotropy(a, b, rho, c, random_measure(rng), random_hamiltonian(rng, d));
    return std::max(std::abs(r.daemonic.total - r.daemonic.incoherent - r.daemonic.coherent),
                    std::abs(r.gain.total - r.gain.incoherent - r.gain.coherent));
  });
  s.check("qubit_gain_closed_form", 1000, kTight, [](Rng& rng, int) {
    const KrausChannel a = random_zoo_channel(rng, 2);
    const KrausChannel b = random_zoo_channel(rng, 2);
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const ControlSpec c = random_control(rng);
    const MeasureSpec m = random_measure(rng);
    const qubit::GainTerms t = qubit::gain_terms(a, b, rho, c, m);
    const DaemonicReport r = daemonic_ergotropy(a, b, rho, c, m, Hamiltonian::qubit());
    return std::max(std::abs(qubit::incoherent_gain(t) - r.gain.incoherent),
                    std::abs(qubit::coherent_gain(t) - r.gain.coherent));
  });
}

void oracle_suite(Suite& s) {
  const ControlSpec half(0.5, 0.0);
  const MeasureSpec plus(0.5, 0.0);
  const Hamiltonian qh = Hamiltonian::qubit();

  s.check("depol_qubit", 200, kTight, [&](Rng& rng, int) {
    const ComplexMatrix rho = random_density_matrix(rng, 2, 1 + rng.index(2));
    const KrausChannel dep = depolarizing(2);
    const DaemonicReport r = daemonic_ergotropy(dep, dep, rho, half, plus, qh);
    const DepolQubitOracle o = depol_qubit_oracle(rho);
    return std::max({std::abs(o.wd - r.daemonic.total), std::abs(o.wd_i - r.daemonic.incoherent),
                     std::abs(o.wd_c - r.daemonic.coherent)});
  });
  s.check("depol_ddim", 200, kTight, [&](Rng& rng, int) {
    const int d = 3 + rng.index(2);
    const ComplexMatrix rho = random_density_matrix(rng, d, 1 + rng.index(d));
    const Hamiltonian h = random_hamiltonian(rng, d);
    const KrausChannel dep = depolarizing(d);
    const DaemonicReport r = daemonic_ergotropy(dep, dep, rho, half, plus, h);
    const DepolDdimOracle o = depol_ddim_oracle(rho, h);
    return std::max(std::abs(o.wd - r.daemonic.total), std::abs(o.wd_i - r.daemonic.incoherent));
  });
  s.check("thermal_cross_map", 50, kTight, [&](Rng& rng, int) {
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const double beta = rng.uniform(0.0, 4.0);
    const KrausChannel t = thermalizing(qh, beta);
    const ComplexMatrix g = qh.gibbs(beta);
    return max_abs(cross_map(t, t, rho) - g * rho * g);
  });
  s.check("thermal_incoherent", 200, kTight, [&](Rng& rng, int) {
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const double beta = rng.uniform(0.0, 4.0);
    const KrausChannel t = thermalizing(qh, beta);
    const DaemonicReport r = daemonic_ergotropy(t, t, rho, half, plus, qh);
    const ThermalOracle o = thermal_oracle(beta, rho);
    const ConditionalPair pair = conditional_states(t, t, rho, half, plus);
    return std::max({std::abs(o.wd_i - r.daemonic.incoherent),
                     max_abs(o.weighted_plus - pair.weighted_plus),
                     max_abs(o.weighted_minus - pair.weighted_minus)});
  });
  s.check("thermal_depolarizing_limit", 200, kTight, [&](Rng& rng, int) {
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    return std::abs(thermal_oracle(0.0, rho).wd_i - depol_qubit_oracle(rho).wd_i);
  });
  s.check("thermal_input", 200, kTight, [&](Rng& rng, int) {
    const double beta = rng.uniform(0.0, 3.0);
    const double beta_in = rng.uniform(0.0, 6.0);
    const KrausChannel t = thermalizing(qh, beta);
    const DaemonicReport r = daemonic_ergotropy(t, t, qh.gibbs(beta_in), half, plus, qh);
    return std::max(std::abs(thermal_input_gain(beta, beta_in) - r.daemonic.total),
                    std::abs(r.daemonic.coherent));
  });
  s.check("adpf", 200, kTight, [&](Rng& rng, int) {
    AdpfParams params;
    params.gamma = rng.uniform();
    params.p = rng.uniform();
    params.q = rng.uniform();
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const auto [a, b] = adpf_channels(params);
    const DaemonicReport r = daemonic_ergotropy(a, b, rho, half, plus, qh);
    const AdpfOracle o = adpf_oracle(params, rho);
    const ComplexMatrix ab = apply_composed(a, b, rho);
    const double delta = (rho(1, 1) - rho(0, 0)).real();
    ComplexMatrix chi = ab;
    chi(0, 0) -= params.gamma * (1.0 - params.q) * params.p * (1.0 + delta);
    chi(1, 1) -= params.gamma * (1.0 - params.q) * (1.0 - params.p) * (1.0 - delta);
    const ComplexMatrix pipeline_chi = cross_map(a, b, rho);
    const qubit::GainTerms t = qubit::gain_terms(a, b, rho, half, plus);
    return std::max({std::abs(o.dW_i - r.gain.incoherent), max_abs(chi - pipeline_chi),
                     std::abs(o.delta_rho_class - t.delta_class),
                     std::abs(o.zeta - t.zeta.real())});
  });
  s.check("optimal_incoherent_basis", 200, kTight, [&](Rng& rng, int) {
    const KrausChannel a = random_zoo_channel(rng, 2);
    const KrausChannel b = random_zoo_channel(rng, 2);
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const ControlSpec c = random_control(rng);
    const MeasureSpec m = qubit::optimal_incoherent_measurement(a, b, rho, c);
    const DaemonicReport r = daemonic_ergotropy(a, b, rho, c, m, qh);
    return std::max(std::abs(qubit::optimal_incoherent_gain(a, b, rho, c) - r.gain.incoherent),
                    std::abs(qubit::optimal_incoherent_gain_causal_form(a, b, rho, c) -
                             r.gain.incoherent));
  });
  s.check("commuting_incoherent_gain", 200, kTight, [&](Rng& rng, int) {
    const double p = rng.uniform();
    const double gamma = rng.uniform();
    const double q = rng.uniform();
    const KrausChannel a = gad(p, gamma);
    const KrausChannel b = phase_flip(q);
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const ControlSpec c = random_control(rng);
    const MeasureSpec m = qubit::optimal_incoherent_measurement(a, b, rho, c);
    const DaemonicReport r = daemonic_ergotropy(a, b, rho, c, m, qh);
    return std::abs(qubit::commuting_incoherent_gain(a, b, rho, c) - r.gain.incoherent);
  });
  s.check("causal_incoherent_gain", 200, kTight, [&](Rng& rng, int) {
    const KrausChannel a = random_zoo_channel(rng, 2);
    const KrausChannel b = random_zoo_channel(rng, 2);
    const ComplexMatrix rho = random_density_matrix(rng, 2);
    const ControlSpec c = random_control(rng);
    const DaemonicReport r = daemonic_ergotropy(a, b, rho, c, MeasureSpec(1.0, 0.0), qh);
    return std::abs(qubit::causal_incoherent_gain(a, b, rho, c.phi()) - r.gain.incoherent);
  });
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"cptp", "switch", "ergotropy", "oracles",
                                                  "all"};
  return suites;
}

VerifyReport verify(const std::string& suite, std::uint64_t seed) {
  const auto& known = verify_suites();
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw ParameterOutOfRange("unknown verify suite '" + suite + "'");
  }
  VerifyReport report;
  report.suite = suite;
  report.seed = seed;
  const std::vector<std::pair<std::string, void (*)(Suite&)>> runners = {
      {"cptp", cptp_suite},
      {"switch", switch_suite},
      {"ergotropy", ergotropy_suite},
      {"oracles", oracle_suite},
  };
  for (const auto& [name, body] : runners) {
    if (suite != "all" && suite != name) continue;
    Suite s(name, seed, report.checks);
    body(s);
  }
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const VerifyCheck& c) { return c.passed; });
  return report;
}

std::string VerifyReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"suite", c.suite},
                           {"name", c.name},
                           {"cases", c.cases},
                           {"max_violation", c.value},
                           {"tolerance", c.tolerance},
                           {"passed", c.passed}});
  }
  const nlohmann::json out = {{"tool", "ergoswitch"}, {"version", version()},
                              {"suite", suite},       {"seed", seed},
                              {"passed", passed},     {"checks", checks_json}};
  return out.dump(2) + "\n";
}

}  // namespace ergoswitch

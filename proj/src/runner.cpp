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

#include "ergoswitch/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ergoswitch/optimizer.hpp"
#include "ergoswitch/parallel.hpp"
#include "ergoswitch/qubit_gain.hpp"
#include "ergoswitch/random_states.hpp"
#include "ergoswitch/scenarios.hpp"

#ifndef ERGOSWITCH_VERSION
#define ERGOSWITCH_VERSION "0.0.0"
#endif

namespace ergoswitch {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Point {
  double delta_rho = 0.0;
  double beta = 0.0;
  double beta_in = 0.0;
  int sample = 0;
};

std::vector<double> axis_values(double lo, double hi, int points) {
  std::vector<double> out(points);
  for (int k = 0; k < points; ++k) {
    out[k] = points == 1 ? lo : (k == points - 1 ? hi : lo + (hi - lo) * k / (points - 1));
  }
  return out;
}

void assign(Point& p, const std::string& variable, double value, int index) {
  if (variable == "delta_rho") p.delta_rho = value;
  if (variable == "beta") p.beta = value;
  if (variable == "beta_in") p.beta_in = value;
  if (variable == "sample") p.sample = index;
}

double channel_beta(const RunConfig& cfg) {
  const auto it = cfg.channel_a.params.find("beta");
  return it == cfg.channel_a.params.end() ? 0.0 : it->second;
}

std::vector<Point> build_points(const RunConfig& cfg) {
  const SweepSpec& s = cfg.sweep;
  std::vector<double> first = axis_values(s.min, s.max, s.points);
  if (s.variable == "delta_rho" && cfg.scenario == ScenarioKind::Adpf) {
    // Window edges and special points are where the structure changes.
    AdpfParams params{cfg.channel_a.params.at("gamma"), cfg.channel_a.params.at("p"),
                      cfg.channel_b.params.at("q")};
    const GainWindow w = gain_window(params);
    const AdpfSpecialPoints sp = adpf_special_points(params);
    std::vector<double> extra = {sp.trivial};
    if (w.gain_possible) extra.insert(extra.end(), {-w.x_minus, w.x_plus});
    if (sp.coherence_match_defined) extra.push_back(sp.coherence_match);
    for (double x : extra) {
      if (x >= s.min && x <= s.max) first.push_back(x);
    }
    std::sort(first.begin(), first.end());
    first.erase(std::unique(first.begin(), first.end(),
                            [](double l, double r) { return std::abs(l - r) < 1e-12; }),
                first.end());
  }
  const std::vector<double> second = axis_values(s.min2, s.max2, s.points2);

  Point base;
  base.delta_rho = cfg.delta_rho;
  base.beta = channel_beta(cfg);
  base.beta_in = cfg.beta_in;

  std::vector<Point> points;
  const bool has_first = s.variable != "none";
  const bool has_second = s.variable2 != "none";
  const std::size_t n1 = has_first ? first.size() : 1;
  const std::size_t n2 = has_second ? second.size() : 1;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      Point p = base;
      if (has_first) assign(p, s.variable, first[i], static_cast<int>(i));
      if (has_second) assign(p, s.variable2, second[j], static_cast<int>(j));
      points.push_back(p);
    }
  }
  return points;
}

KrausChannel make_channel(const ChannelSpec& spec, const Hamiltonian& h, double beta) {
  const int d = h.dim();
  if (spec.type == "identity") return identity_channel(d);
  if (spec.type == "depolarizing") return depolarizing(d);
  if (spec.type == "thermalizing") return thermalizing(h, beta);
  if (spec.type == "gad") return gad(spec.params.at("p"), spec.params.at("gamma"));
  if (spec.type == "phase_flip") return phase_flip(spec.params.at("q"));
  if (spec.type == "x_rotation") return x_rotation(spec.params.at("theta"));
  throw ConfigError("unknown channel type '" + spec.type + "'");
}

ComplexMatrix parse_matrix(const std::string& text, int d) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(row);
  if (static_cast<int>(rows.size()) != d) {
    throw ConfigError("state matrix needs " + std::to_string(d) + " rows", 0, "state.matrix");
  }
  ComplexMatrix m(d, d);
  for (int r = 0; r < d; ++r) {
    std::vector<std::string> cells;
    std::istringstream rin(rows[r]);
    std::string cell;
    while (std::getline(rin, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) != d) {
      throw ConfigError("state matrix row " + std::to_string(r + 1) + " needs " +
                            std::to_string(d) + " entries",
                        0, "state.matrix");
    }
    for (int c = 0; c < d; ++c) {
      std::istringstream cell_in(cells[c]);
      std::string re;
      std::string im = "0";
      cell_in >> re;
      cell_in >> im;
      m(r, c) = Complex(parse_number(re), parse_number(im));
    }
  }
  if (!is_density_matrix(m, 1e-9)) {
    throw ConfigError("state matrix is not a density matrix", 0, "state.matrix");
  }
  return hermitian_part(m);
}

std::vector<ComplexMatrix> random_states(const RunConfig& cfg, std::size_t count, int d) {
  std::vector<ComplexMatrix> out;
  if (cfg.state != StateKind::RandomPure && cfg.state != StateKind::RandomMixed) return out;
  Rng rng(cfg.seed);
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(cfg.state == StateKind::RandomPure ? random_pure_state(rng, d)
                                                     : random_density_matrix(rng, d));
  }
  return out;
}

ComplexMatrix make_state(const RunConfig& cfg, const Point& p, const Hamiltonian& h,
                         const std::vector<ComplexMatrix>& randoms, std::size_t index) {
  switch (cfg.state) {
    case StateKind::Qubit:
      return cfg.coherence ? qubit_state(p.delta_rho, *cfg.coherence, cfg.phase)
                           : maximally_coherent_qubit(p.delta_rho, cfg.phase);
    case StateKind::Diagonal: {
      ComplexMatrix rho = ComplexMatrix::Zero(h.dim(), h.dim());
      for (int k = 0; k < h.dim(); ++k) rho(k, k) = cfg.populations[k];
      return rho;
    }
    case StateKind::Thermal:
      return h.gibbs(p.beta_in);
    case StateKind::RandomPure:
    case StateKind::RandomMixed:
      return randoms[index];
    case StateKind::Matrix:
      return parse_matrix(cfg.matrix, h.dim());
  }
  return {};
}

bool is_half_zero(double phi, double alpha) { return phi == 0.5 && alpha == 0.0; }

bool unit_qubit_energies(const std::vector<double>& e) {
  return e.size() == 2 && e[0] == 0.0 && e[1] == 1.0;
}

std::string oracle_name(const RunConfig& cfg) {
  const bool standard_control = is_half_zero(cfg.control_phi, cfg.control_alpha);
  const bool qubit = unit_qubit_energies(cfg.energies);
  switch (cfg.scenario) {
    case ScenarioKind::DepolQubit:
      return standard_control && qubit ? "depol_qubit" : "";
    case ScenarioKind::DepolDdim:
      return standard_control ? "depol_ddim" : "";
    case ScenarioKind::Thermal:
      if (!standard_control || !qubit) return "";
      return cfg.state == StateKind::Thermal ? "thermal_input" : "thermal";
    case ScenarioKind::Adpf:
      return standard_control && qubit ? "adpf" : "";
    case ScenarioKind::Custom:
      return qubit ? "qubit_closed_form" : "";
  }
  return "";
}

std::vector<std::string> extra_columns(const RunConfig& cfg) {
  std::vector<std::string> cols;
  const bool beta_used = cfg.scenario == ScenarioKind::Thermal;
  const bool beta_in_used = cfg.state == StateKind::Thermal;
  if (beta_used) cols.push_back("beta");
  if (beta_in_used) cols.push_back("beta_in");
  if (beta_used && beta_in_used) cols.push_back("activation");
  if (cfg.sweep.variable == "sample" || cfg.sweep.variable2 == "sample") {
    cols.push_back("sample");
  }
  if (cfg.scenario == ScenarioKind::Adpf) {
    cols.insert(cols.end(), {"x_minus", "x_plus", "in_window"});
  }
  return cols;
}

double max_diff(std::initializer_list<std::pair<double, double>> pairs) {
  double out = 0.0;
  for (const auto& [x, y] : pairs) out = std::max(out, std::abs(x - y));
  return out;
}

struct PointContext {
  const RunConfig& cfg;
  const Hamiltonian& h;
  const std::string& oracle;
  const std::vector<std::string>& columns;
};

RunRecord evaluate_point(const PointContext& ctx, const Point& p, const ComplexMatrix& rho) {
  const RunConfig& cfg = ctx.cfg;
  const KrausChannel a = make_channel(cfg.channel_a, ctx.h, p.beta);
  const KrausChannel b = make_channel(cfg.channel_b, ctx.h, p.beta);
  const ControlSpec control(cfg.control_phi, cfg.control_alpha);
  const DaemonicEvaluator evaluator(a, b, rho, control, ctx.h);

  RunRecord rec;
  // Qubit-kind states report the requested imbalance, not the rounded one.
  if (cfg.state == StateKind::Qubit) {
    rec.delta_rho = p.delta_rho;
  } else {
    rec.delta_rho = rho.rows() == 2 ? (rho(1, 1) - rho(0, 0)).real() : kNaN;
  }
  if (cfg.optimize) {
    OptimizerOptions options;
    options.parallel_grid = false;
    rec.report = optimize_measurement(evaluator, options).report;
  } else {
    rec.report = evaluator.evaluate(MeasureSpec(cfg.measure_phi, cfg.measure_alpha));
  }

  // Oracles are stated for the (½, 0) measurement; optimized rows are
  // re-evaluated there for the residual.
  const MeasureSpec standard(0.5, 0.0);
  rec.residual_oracle = kNaN;
  if (ctx.oracle == "depol_qubit") {
    const DaemonicReport at = evaluator.evaluate(standard);
    const DepolQubitOracle o = depol_qubit_oracle(rho);
    rec.residual_oracle = max_diff({{o.wd, at.daemonic.total},
                                    {o.wd_i, at.daemonic.incoherent},
                                    {o.wd_c, at.daemonic.coherent}});
  } else if (ctx.oracle == "depol_ddim") {
    const DaemonicReport at = evaluator.evaluate(standard);
    const DepolDdimOracle o = depol_ddim_oracle(rho, ctx.h);
    rec.residual_oracle =
        max_diff({{o.wd, at.daemonic.total}, {o.wd_i, at.daemonic.incoherent}});
  } else if (ctx.oracle == "thermal") {
    const DaemonicReport at = evaluator.evaluate(standard);
    rec.residual_oracle = std::abs(thermal_oracle(p.beta, rho).wd_i - at.daemonic.incoherent);
  } else if (ctx.oracle == "thermal_input") {
    const DaemonicReport at = evaluator.evaluate(standard);
    rec.residual_oracle = std::abs(thermal_input_gain(p.beta, p.beta_in) - at.daemonic.total);
  } else if (ctx.oracle == "adpf") {
    const DaemonicReport at = evaluator.evaluate(standard);
    const AdpfParams params{cfg.channel_a.params.at("gamma"), cfg.channel_a.params.at("p"),
                            cfg.channel_b.params.at("q")};
    rec.residual_oracle = std::abs(adpf_oracle(params, rho).dW_i - at.gain.incoherent);
  } else if (ctx.oracle == "qubit_closed_form") {
    const qubit::GainTerms t = qubit::gain_terms(a, b, rho, control, rec.report.measure);
    rec.residual_oracle = max_diff({{qubit::incoherent_gain(t), rec.report.gain.incoherent},
                                    {qubit::coherent_gain(t), rec.report.gain.coherent}});
  }

  for (const auto& col : ctx.columns) {
    if (col == "beta") rec.extras.push_back(p.beta);
    if (col == "beta_in") rec.extras.push_back(p.beta_in);
    if (col == "activation") {
      rec.extras.push_back(thermal_activation_threshold(p.beta, p.beta_in) ? 1.0 : 0.0);
    }
    if (col == "sample") rec.extras.push_back(p.sample);
    if (col == "x_minus" || col == "x_plus" || col == "in_window") {
      const AdpfParams params{cfg.channel_a.params.at("gamma"), cfg.channel_a.params.at("p"),
                              cfg.channel_b.params.at("q")};
      const GainWindow w = gain_window(params);
      if (col == "x_minus") rec.extras.push_back(w.x_minus);
      if (col == "x_plus") rec.extras.push_back(w.x_plus);
      if (col == "in_window") rec.extras.push_back(w.contains(rec.delta_rho) ? 1.0 : 0.0);
    }
  }
  return rec;
}

}  // namespace

std::string version() { return ERGOSWITCH_VERSION; }

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

RunResult run(const RunConfig& config) {
  RunResult result;
  result.config = config;
  const Hamiltonian h = Hamiltonian::diagonal(config.energies);
  result.oracle = oracle_name(config);
  result.extra_columns = extra_columns(config);

  const std::vector<Point> points = build_points(config);
  const std::vector<ComplexMatrix> randoms = random_states(config, points.size(), h.dim());
  std::vector<ComplexMatrix> states(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::size_t pick = config.sweep.variable == "sample" ? points[k].sample : k;
    states[k] = make_state(config, points[k], h, randoms, pick);
  }

  const PointContext ctx{config, h, result.oracle, result.extra_columns};
  result.records.resize(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    result.records[k] = evaluate_point(ctx, points[k], states[k]);
  });

  for (const auto& rec : result.records) {
    const WorkSplit& g = rec.report.gain;
    result.max_ledger_defect =
        std::max(result.max_ledger_defect, std::abs(g.total - g.incoherent - g.coherent));
    if (!std::isnan(rec.residual_oracle)) {
      result.max_residual = std::max(result.max_residual, rec.residual_oracle);
    }
  }
  if (result.max_residual > kOracleTolerance || result.max_ledger_defect > kLedgerTolerance) {
    result.exit_code = kExitResidual;
  }
  return result;
}

namespace {

const std::vector<std::string>& fixed_columns() {
  static const std::vector<std::string> cols = {
      "delta_rho", "p_plus", "p_minus", "W_class", "WD", "dW",
      "dW_i",      "dW_c",   "residual_oracle", "phi_opt", "alpha_opt"};
  return cols;
}

std::vector<double> fixed_values(const RunRecord& rec) {
  const DaemonicReport& r = rec.report;
  return {rec.delta_rho,   r.p_plus,         r.p_minus,        r.classical.total,
          r.daemonic.total, r.gain.total,    r.gain.incoherent, r.gain.coherent,
          rec.residual_oracle, r.measure.phi(), r.measure.alpha()};
}

nlohmann::json number_json(double value) {
  if (std::isnan(value) || std::isinf(value)) return nullptr;
  return value;
}

}  // namespace

std::string render_csv(const RunResult& result) {
  std::ostringstream out;
  std::vector<std::string> header = fixed_columns();
  header.insert(header.end(), result.extra_columns.begin(), result.extra_columns.end());
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  for (const auto& rec : result.records) {
    std::vector<double> values = fixed_values(rec);
    values.insert(values.end(), rec.extras.begin(), rec.extras.end());
    for (std::size_t c = 0; c < values.size(); ++c) {
      out << (c ? "," : "") << format_number(values[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const RunResult& result) {
  using nlohmann::json;
  json config = json::object();
  for (const auto& [section, entries] : result.config.document.sections()) {
    json s = json::object();
    for (const auto& [key, entry] : entries) s[key] = entry.value;
    config[section] = s;
  }

  json records = json::array();
  for (const auto& rec : result.records) {
    const DaemonicReport& r = rec.report;
    json row = {
        {"delta_rho", number_json(rec.delta_rho)},
        {"phi_m", r.measure.phi()},
        {"alpha_m", r.measure.alpha()},
        {"p_plus", r.p_plus},
        {"p_minus", r.p_minus},
        {"WD", r.daemonic.total},
        {"WD_i", r.daemonic.incoherent},
        {"WD_c", r.daemonic.coherent},
        {"W_class", r.classical.total},
        {"W_class_i", r.classical.incoherent},
        {"W_class_c", r.classical.coherent},
        {"dW", r.gain.total},
        {"dW_i", r.gain.incoherent},
        {"dW_c", r.gain.coherent},
        {"residual_oracle", number_json(rec.residual_oracle)},
    };
    for (std::size_t c = 0; c < result.extra_columns.size(); ++c) {
      row[result.extra_columns[c]] = number_json(rec.extras[c]);
    }
    records.push_back(row);
  }

  json envelope = {
      {"tool", "ergoswitch"},
      {"version", version()},
      {"scenario", to_string(result.config.scenario)},
      {"config", config},
      {"config_text", result.config.document.canonical()},
      {"oracle", result.oracle.empty() ? json(nullptr) : json(result.oracle)},
      {"residuals",
       {{"max_oracle", result.oracle.empty() ? json(nullptr) : json(result.max_residual)},
        {"oracle_tolerance", kOracleTolerance},
        {"max_ledger_defect", result.max_ledger_defect},
        {"ledger_tolerance", kLedgerTolerance}}},
      {"exit_code", result.exit_code},
      {"records", records},
  };
  return envelope.dump(2) + "\n";
}

void write_outputs(const RunResult& result, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
  };
  write(fs::path(dir) / "results.csv", render_csv(result));
  write(fs::path(dir) / "results.json", render_json(result));
}

}  // namespace ergoswitch

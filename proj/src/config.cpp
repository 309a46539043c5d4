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

#include "ergoswitch/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace ergoswitch {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(trim(part));
  return out;
}

double parse_plain(const std::string& text) {
  const std::string t = trim(text);
  if (t == "pi") return std::numbers::pi;
  double value = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (!t.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("not a number: '" + text + "'");
  }
  return value;
}

}  // namespace

ConfigError::ConfigError(const std::string& message, int line, std::string key)
    : Error([&] {
        std::string where;
        if (line > 0) where += "line " + std::to_string(line);
        if (!key.empty()) where += (where.empty() ? "key '" : ", key '") + key + "'";
        return where.empty() ? message : where + ": " + message;
      }()),
      line_(line),
      key_(std::move(key)) {}

double parse_number(const std::string& text) {
  const std::string t = lower(trim(text));
  if (const auto star = t.find('*'); star != std::string::npos) {
    return parse_number(t.substr(0, star)) * parse_number(t.substr(star + 1));
  }
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const double den = parse_plain(t.substr(slash + 1));
    if (den == 0.0) throw ConfigError("division by zero in '" + text + "'");
    return parse_plain(t.substr(0, slash)) / den;
  }
  return parse_plain(t);
}

ConfigDocument ConfigDocument::parse(const std::string& text) {
  ConfigDocument doc;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (const auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    // ';' also separates matrix rows, so it only opens a comment at line start.
    if (!s.empty() && s.front() == ';') continue;
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("unterminated section header", line);
      section = lower(trim(s.substr(1, s.size() - 2)));
      if (section.empty()) throw ConfigError("empty section name", line);
      doc.sections_[section];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
    const std::string key = lower(trim(s.substr(0, eq)));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line);
    if (section.empty()) throw ConfigError("key outside of a section", line, key);
    if (doc.sections_[section].count(key) != 0) {
      throw ConfigError("duplicate key", line, section + "." + key);
    }
    doc.sections_[section][key] = Entry{value, line};
  }
  return doc;
}

ConfigDocument ConfigDocument::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

bool ConfigDocument::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

const ConfigDocument::Entry* ConfigDocument::find(const std::string& section,
                                                  const std::string& key) const {
  const auto s = sections_.find(section);
  if (s == sections_.end()) return nullptr;
  const auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

void ConfigDocument::set(const std::string& section, const std::string& key,
                         const std::string& value) {
  sections_[section][key] = Entry{value, 0};
}

std::string ConfigDocument::canonical() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, entries] : sections_) {
    if (!first) out << '\n';
    first = false;
    out << '[' << name << "]\n";
    for (const auto& [key, entry] : entries) out << key << " = " << entry.value << '\n';
  }
  return out.str();
}

bool ConfigDocument::operator==(const ConfigDocument& other) const {
  if (sections_.size() != other.sections_.size()) return false;
  for (const auto& [name, entries] : sections_) {
    const auto it = other.sections_.find(name);
    if (it == other.sections_.end() || it->second.size() != entries.size()) return false;
    for (const auto& [key, entry] : entries) {
      const auto k = it->second.find(key);
      if (k == it->second.end() || k->second.value != entry.value) return false;
    }
  }
  return true;
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::DepolQubit:
      return "depol_qubit";
    case ScenarioKind::DepolDdim:
      return "depol_ddim";
    case ScenarioKind::Thermal:
      return "thermal";
    case ScenarioKind::Adpf:
      return "adpf";
    case ScenarioKind::Custom:
      return "custom";
  }
  return "unknown";
}

namespace {

class Reader {
 public:
  explicit Reader(const ConfigDocument& doc) : doc_(doc) {}

  void allow(const std::string& section, std::set<std::string> keys) {
    allowed_[section] = std::move(keys);
  }

  void check_known() const {
    for (const auto& [name, entries] : doc_.sections()) {
      const auto it = allowed_.find(name);
      if (it == allowed_.end()) {
        const int line = entries.empty() ? 0 : entries.begin()->second.line;
        throw ConfigError("unknown section '" + name + "'", line);
      }
      for (const auto& [key, entry] : entries) {
        if (it->second.count(key) == 0) {
          throw ConfigError("unknown key", entry.line, name + "." + key);
        }
      }
    }
  }

  std::optional<std::string> text(const std::string& section, const std::string& key) const {
    const auto* e = doc_.find(section, key);
    if (e == nullptr) return std::nullopt;
    return e->value;
  }

  std::string require_text(const std::string& section, const std::string& key) const {
    const auto* e = doc_.find(section, key);
    if (e == nullptr) throw ConfigError("missing required key", 0, section + "." + key);
    return e->value;
  }

  double number(const std::string& section, const std::string& key, double fallback) const {
    const auto* e = doc_.find(section, key);
    if (e == nullptr) return fallback;
    return convert(*e, section, key);
  }

  double require_number(const std::string& section, const std::string& key) const {
    const auto* e = doc_.find(section, key);
    if (e == nullptr) throw ConfigError("missing required key", 0, section + "." + key);
    return convert(*e, section, key);
  }

  std::vector<double> list(const std::string& section, const std::string& key) const {
    const auto* e = doc_.find(section, key);
    if (e == nullptr) return {};
    std::vector<double> out;
    for (const auto& item : split(e->value, ',')) {
      out.push_back(convert(Entry{item, e->line}, section, key));
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& section, const std::string& key,
            const std::string& message) const {
    const auto* e = doc_.find(section, key);
    throw ConfigError(message, e == nullptr ? 0 : e->line, section + "." + key);
  }

 private:
  using Entry = ConfigDocument::Entry;

  static double convert(const Entry& e, const std::string& section, const std::string& key) {
    try {
      return parse_number(e.value);
    } catch (const ConfigError& err) {
      throw ConfigError(err.what(), e.line, section + "." + key);
    }
  }

  const ConfigDocument& doc_;
  std::map<std::string, std::set<std::string>> allowed_;
};

int to_count(const Reader& r, const std::string& section, const std::string& key,
             double value) {
  if (!(value >= 1.0) || value != std::floor(value) || value > 1e7) {
    r.fail(section, key, "expected a positive integer");
  }
  return static_cast<int>(value);
}

void require_range(const Reader& r, const std::string& section, const std::string& key,
                   double value, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream msg;
    msg << "value " << value << " outside [" << lo << ", " << hi << "]";
    r.fail(section, key, msg.str());
  }
}

ChannelSpec read_channel(const Reader& r, const std::string& section) {
  ChannelSpec spec;
  spec.type = lower(r.require_text(section, "type"));
  static const std::map<std::string, std::vector<std::string>> kParams = {
      {"identity", {}},       {"depolarizing", {}},   {"thermalizing", {"beta"}},
      {"gad", {"p", "gamma"}}, {"phase_flip", {"q"}}, {"x_rotation", {"theta"}},
  };
  const auto it = kParams.find(spec.type);
  if (it == kParams.end()) r.fail(section, "type", "unknown channel type '" + spec.type + "'");
  for (const auto& name : it->second) spec.params[name] = r.require_number(section, name);
  for (const auto& name : {"p", "gamma", "q"}) {
    if (spec.params.count(name) != 0) {
      require_range(r, section, name, spec.params[name], 0.0, 1.0);
    }
  }
  if (spec.params.count("beta") != 0) {
    require_range(r, section, "beta", spec.params["beta"], 0.0, 1e6);
  }
  return spec;
}

}  // namespace

RunConfig RunConfig::from_document(const ConfigDocument& doc) {
  Reader r(doc);
  r.allow("scenario", {"name"});
  r.allow("channel", {"dim", "beta", "gamma", "p", "q"});
  r.allow("channel_a", {"type", "beta", "gamma", "p", "q", "theta"});
  r.allow("channel_b", {"type", "beta", "gamma", "p", "q", "theta"});
  r.allow("hamiltonian", {"energies"});
  r.allow("state", {"kind", "delta_rho", "coherence", "phase", "populations",
                    "beta_in", "matrix"});
  r.allow("control", {"phi", "alpha"});
  r.allow("measurement", {"mode", "phi", "alpha"});
  r.allow("sweep", {"variable", "min", "max", "points", "variable2", "min2", "max2",
                    "points2"});
  r.allow("output", {"dir"});
  r.allow("run", {"seed"});
  r.check_known();

  RunConfig cfg;
  cfg.document = doc;

  static const std::map<std::string, ScenarioKind> kScenarios = {
      {"depol_qubit", ScenarioKind::DepolQubit}, {"depol_ddim", ScenarioKind::DepolDdim},
      {"thermal", ScenarioKind::Thermal},        {"adpf", ScenarioKind::Adpf},
      {"custom", ScenarioKind::Custom},
  };
  const std::string name = lower(r.require_text("scenario", "name"));
  const auto scenario = kScenarios.find(name);
  if (scenario == kScenarios.end()) r.fail("scenario", "name", "unknown scenario '" + name + "'");
  cfg.scenario = scenario->second;

  int dim = 2;
  switch (cfg.scenario) {
    case ScenarioKind::DepolQubit:
      cfg.channel_a = cfg.channel_b = ChannelSpec{"depolarizing", {}};
      break;
    case ScenarioKind::DepolDdim: {
      dim = to_count(r, "channel", "dim", r.number("channel", "dim", 3.0));
      if (dim < 2 || dim > 16) r.fail("channel", "dim", "dimension must lie in [2, 16]");
      cfg.channel_a = cfg.channel_b = ChannelSpec{"depolarizing", {}};
      break;
    }
    case ScenarioKind::Thermal: {
      const double beta = r.number("channel", "beta", 1.0);
      require_range(r, "channel", "beta", beta, 0.0, 1e6);
      cfg.channel_a = cfg.channel_b = ChannelSpec{"thermalizing", {{"beta", beta}}};
      break;
    }
    case ScenarioKind::Adpf: {
      const double gamma = r.number("channel", "gamma", 0.5);
      const double p = r.number("channel", "p", 1.0 / 3.0);
      const double q = r.number("channel", "q", 0.0);
      require_range(r, "channel", "gamma", gamma, 0.0, 1.0);
      require_range(r, "channel", "p", p, 0.0, 1.0);
      require_range(r, "channel", "q", q, 0.0, 1.0);
      cfg.channel_a = ChannelSpec{"gad", {{"p", p}, {"gamma", gamma}}};
      cfg.channel_b = ChannelSpec{"phase_flip", {{"q", q}}};
      break;
    }
    case ScenarioKind::Custom:
      cfg.channel_a = read_channel(r, "channel_a");
      cfg.channel_b = read_channel(r, "channel_b");
      break;
  }

  cfg.energies = r.list("hamiltonian", "energies");
  if (cfg.energies.empty()) {
    cfg.energies.resize(dim);
    for (int k = 0; k < dim; ++k) cfg.energies[k] = k;
  }
  if (cfg.scenario != ScenarioKind::DepolDdim && cfg.scenario != ScenarioKind::Custom &&
      cfg.energies.size() != 2) {
    r.fail("hamiltonian", "energies", "this scenario needs exactly two energies");
  }
  if (cfg.scenario == ScenarioKind::DepolDdim &&
      cfg.energies.size() != static_cast<std::size_t>(dim)) {
    r.fail("hamiltonian", "energies", "number of energies must equal channel.dim");
  }
  const int d = static_cast<int>(cfg.energies.size());
  if (d < 2) r.fail("hamiltonian", "energies", "need at least two energies");
  for (const auto& ch : {cfg.channel_a, cfg.channel_b}) {
    if ((ch.type == "gad" || ch.type == "phase_flip" || ch.type == "x_rotation") && d != 2) {
      r.fail("hamiltonian", "energies", "channel '" + ch.type + "' acts on a qubit only");
    }
  }

  static const std::map<std::string, StateKind> kStates = {
      {"qubit", StateKind::Qubit},          {"diagonal", StateKind::Diagonal},
      {"thermal", StateKind::Thermal},      {"random_pure", StateKind::RandomPure},
      {"random_mixed", StateKind::RandomMixed}, {"matrix", StateKind::Matrix},
  };
  const std::string default_state =
      cfg.scenario == ScenarioKind::DepolDdim ? "random_pure" : "qubit";
  const std::string kind = lower(r.text("state", "kind").value_or(default_state));
  const auto state = kStates.find(kind);
  if (state == kStates.end()) r.fail("state", "kind", "unknown state kind '" + kind + "'");
  cfg.state = state->second;
  if (cfg.state == StateKind::Qubit && d != 2) {
    r.fail("state", "kind", "state kind 'qubit' needs a two-level Hamiltonian");
  }

  cfg.delta_rho = r.number("state", "delta_rho", 0.0);
  require_range(r, "state", "delta_rho", cfg.delta_rho, -1.0, 1.0);
  if (const auto c = r.text("state", "coherence"); c && lower(*c) != "max") {
    cfg.coherence = r.require_number("state", "coherence");
    require_range(r, "state", "coherence", *cfg.coherence, 0.0, 0.5);
  }
  cfg.phase = r.number("state", "phase", 0.0);
  cfg.populations = r.list("state", "populations");
  if (cfg.state == StateKind::Diagonal) {
    if (cfg.populations.size() != static_cast<std::size_t>(d)) {
      r.fail("state", "populations", "need one population per energy level");
    }
    double sum = 0.0;
    for (double x : cfg.populations) {
      if (x < 0.0) r.fail("state", "populations", "populations must be non-negative");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) r.fail("state", "populations", "populations must sum to 1");
  }
  cfg.beta_in = r.number("state", "beta_in", 0.0);
  require_range(r, "state", "beta_in", cfg.beta_in, 0.0, 1e6);
  if (cfg.state == StateKind::Matrix) cfg.matrix = r.require_text("state", "matrix");

  cfg.control_phi = r.number("control", "phi", 0.5);
  cfg.control_alpha = r.number("control", "alpha", 0.0);
  require_range(r, "control", "phi", cfg.control_phi, 0.0, 1.0);

  const std::string mode = lower(r.text("measurement", "mode").value_or("fixed"));
  if (mode != "fixed" && mode != "optimize") {
    r.fail("measurement", "mode", "expected 'fixed' or 'optimize'");
  }
  cfg.optimize = mode == "optimize";
  cfg.measure_phi = r.number("measurement", "phi", 0.5);
  cfg.measure_alpha = r.number("measurement", "alpha", 0.0);
  require_range(r, "measurement", "phi", cfg.measure_phi, 0.0, 1.0);

  static const std::set<std::string> kVariables = {"none", "delta_rho", "beta", "beta_in",
                                                   "sample"};
  auto read_axis = [&](const std::string& var_key, const std::string& min_key,
                       const std::string& max_key, const std::string& points_key,
                       std::string& variable, double& lo, double& hi, int& points) {
    variable = lower(r.text("sweep", var_key).value_or("none"));
    if (kVariables.count(variable) == 0) {
      r.fail("sweep", var_key, "unknown sweep variable '" + variable + "'");
    }
    lo = r.number("sweep", min_key, 0.0);
    hi = r.number("sweep", max_key, lo);
    points = to_count(r, "sweep", points_key, r.number("sweep", points_key, 1.0));
    if (hi < lo) r.fail("sweep", max_key, "max must not be below min");
    if (variable == "delta_rho") {
      require_range(r, "sweep", min_key, lo, -1.0, 1.0);
      require_range(r, "sweep", max_key, hi, -1.0, 1.0);
      if (d != 2) r.fail("sweep", var_key, "delta_rho sweeps need a qubit");
    }
    if (variable == "beta" || variable == "beta_in") require_range(r, "sweep", min_key, lo, 0.0, 1e6);
    if (variable == "beta" && cfg.scenario != ScenarioKind::Thermal) {
      r.fail("sweep", var_key, "beta sweeps are only defined for the thermal scenario");
    }
    if (variable == "beta_in" && cfg.state != StateKind::Thermal) {
      r.fail("sweep", var_key, "beta_in sweeps need state.kind = thermal");
    }
  };
  read_axis("variable", "min", "max", "points", cfg.sweep.variable, cfg.sweep.min,
            cfg.sweep.max, cfg.sweep.points);
  read_axis("variable2", "min2", "max2", "points2", cfg.sweep.variable2, cfg.sweep.min2,
            cfg.sweep.max2, cfg.sweep.points2);
  if (cfg.sweep.variable2 != "none" && cfg.sweep.variable2 == cfg.sweep.variable) {
    r.fail("sweep", "variable2", "the two sweep variables must differ");
  }
  if (cfg.sweep.variable == "none" && cfg.sweep.variable2 != "none") {
    r.fail("sweep", "variable2", "set sweep.variable before sweep.variable2");
  }
  const bool random_state =
      cfg.state == StateKind::RandomPure || cfg.state == StateKind::RandomMixed;
  if (cfg.sweep.variable == "sample" && !random_state) {
    r.fail("sweep", "variable", "sample sweeps need a random state kind");
  }
  if (cfg.sweep.variable == "delta_rho" && cfg.state != StateKind::Qubit) {
    r.fail("sweep", "variable", "delta_rho sweeps need state.kind = qubit");
  }

  cfg.output_dir = r.text("output", "dir").value_or(cfg.output_dir);
  const double seed = r.number("run", "seed", 42.0);
  if (!(seed >= 0.0) || seed != std::floor(seed) || seed > 9.0e15) {
    r.fail("run", "seed", "seed must be a non-negative integer");
  }
  cfg.seed = static_cast<std::uint64_t>(seed);
  return cfg;
}

}  // namespace ergoswitch

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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ergoswitch/errors.hpp"

namespace ergoswitch {

/// Raised for malformed or invalid configuration; carries the offending
/// line (0 when unknown) and key.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, int line = 0, std::string key = {});

  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

/// Flat `key = value` text grouped under `[section]` headers. Comments start
/// with '#' or ';'. Keys outside any section are rejected.
class ConfigDocument {
 public:
  struct Entry {
    std::string value;
    int line = 0;
  };
  using Section = std::map<std::string, Entry>;

  static ConfigDocument parse(const std::string& text);
  static ConfigDocument load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  const Entry* find(const std::string& section, const std::string& key) const;
  void set(const std::string& section, const std::string& key, const std::string& value);

  const std::map<std::string, Section>& sections() const { return sections_; }

  /// Canonical text: sections and keys in sorted order, one `key = value`
  /// per line. Parsing it yields an equal document.
  std::string canonical() const;

  bool operator==(const ConfigDocument& other) const;

 private:
  std::map<std::string, Section> sections_;
};

/// Numeric literal: a decimal number, a fraction such as 1/3, or a multiple
/// of pi ("pi", "pi/2", "2*pi").
double parse_number(const std::string& text);

struct ChannelSpec {
  std::string type;  ///< identity | depolarizing | thermalizing | gad | phase_flip | x_rotation
  std::map<std::string, double> params;
};

enum class ScenarioKind { DepolQubit, DepolDdim, Thermal, Adpf, Custom };

std::string to_string(ScenarioKind kind);

enum class StateKind {
  Qubit,       ///< δρ and a coherence magnitude (or "max") and phase
  Diagonal,    ///< explicit populations
  Thermal,     ///< Gibbs state of the scenario Hamiltonian at beta_in
  RandomPure,  ///< Haar-random pure states, one per sweep point
  RandomMixed, ///< Ginibre-random mixed states, one per sweep point
  Matrix,      ///< explicit rows "re im, re im; ..."
};

struct SweepSpec {
  std::string variable = "none";  ///< none | delta_rho | beta | beta_in | sample
  double min = 0.0;
  double max = 0.0;
  int points = 1;
  std::string variable2 = "none";
  double min2 = 0.0;
  double max2 = 0.0;
  int points2 = 1;
};

/// Typed view of a validated ConfigDocument.
struct RunConfig {
  ScenarioKind scenario = ScenarioKind::Custom;
  ChannelSpec channel_a;
  ChannelSpec channel_b;
  std::vector<double> energies{0.0, 1.0};

  StateKind state = StateKind::Qubit;
  double delta_rho = 0.0;
  std::optional<double> coherence;  ///< empty means maximal
  double phase = 0.0;
  std::vector<double> populations;
  double beta_in = 0.0;
  std::string matrix;

  double control_phi = 0.5;
  double control_alpha = 0.0;
  bool optimize = false;
  double measure_phi = 0.5;
  double measure_alpha = 0.0;

  SweepSpec sweep;
  std::string output_dir = "ergoswitch_out";
  std::uint64_t seed = 42;

  ConfigDocument document;

  static RunConfig from_document(const ConfigDocument& doc);
};

}  // namespace ergoswitch

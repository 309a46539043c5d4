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
#include <string>
#include <vector>

namespace ergoswitch {

struct VerifyCheck {
  std::string suite;
  std::string name;
  int cases = 0;
  /// Worst violation observed; the check passes when value <= tolerance.
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;
  bool passed = false;

  /// Machine-readable report; byte-identical for equal suite and seed.
  std::string to_json() const;
};

/// Suites: cptp, switch, ergotropy, oracles, all. Throws ParameterOutOfRange
/// for anything else.
VerifyReport verify(const std::string& suite, std::uint64_t seed = 42);

const std::vector<std::string>& verify_suites();

}  // namespace ergoswitch

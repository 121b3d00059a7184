// Copyright 2026 The deco Authors
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

#include <string>
#include <vector>

#include "deco/oracle_suite.hpp"

namespace deco {

struct FormulaMapEntry {
  std::string operation;
  std::string formula;     // what the formula is
  std::string expression;  // plain-text form as implemented
  std::string status;      // closed form only, or the oracle verdict
};

std::vector<FormulaMapEntry> formula_map_entries(const oracle::VerificationReport& report);

/// Markdown document committed as docs/formula_map.md.
std::string render_formula_map(const oracle::VerificationReport& report);

/// render_formula_map(oracle::verify_all()).
std::string generate_formula_map();

}  // namespace deco

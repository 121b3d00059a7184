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

#include <string_view>

namespace deco {

enum class PressureUnit { Pa, mbar };

/// Converts a pressure reading to pascal. 1 mbar = 100 Pa exactly.
double pressure_to_si(double value, PressureUnit unit);

/// Parses "1e-17mbar", "5e-5 Pa" or a bare number (pascal).
double parse_pressure(std::string_view text);

}  // namespace deco

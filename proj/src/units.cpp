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

#include "deco/units.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "deco/errors.hpp"

namespace deco {

double pressure_to_si(double value, PressureUnit unit) {
  if (!(value >= 0.0)) {
    throw DomainError("pressure must be non-negative");
  }
  switch (unit) {
    case PressureUnit::Pa:
      return value;
    case PressureUnit::mbar:
      return value * 100.0;
  }
  throw DomainError("unknown pressure unit");
}

double parse_pressure(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();

  PressureUnit unit = PressureUnit::Pa;
  auto strip_suffix = [&s](std::string_view suffix) {
    if (s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
      s.resize(s.size() - suffix.size());
      return true;
    }
    return false;
  };
  if (strip_suffix("mbar")) {
    unit = PressureUnit::mbar;
  } else {
    strip_suffix("Pa");
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();

  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || s.empty()) {
    throw DomainError("cannot parse pressure '" + std::string(text) + "'");
  }
  return pressure_to_si(value, unit);
}

}  // namespace deco

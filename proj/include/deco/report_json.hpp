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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "deco/combine.hpp"
#include "deco/oracle_suite.hpp"
#include "deco/scan.hpp"
#include "deco/table_one.hpp"

namespace deco::report {

inline constexpr int kSchemaVersion = 1;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nearest double to the 9-significant-digit decimal form of v. Its shortest
/// representation has at most 9 digits, so JSON output is stable.
double round9(double v);

nlohmann::json to_json(const DecoherenceSummary& summary);
nlohmann::json to_json(const oracle::VerificationReport& report);
nlohmann::json to_json(const BenchmarkReport& report);
nlohmann::json to_json(const Material& material);

/// Frozen header `T_K,dx_m,tau_g_s,tau_tc_s,ratio,dominant`, rows in
/// (T, dx) order, 9 significant digits.
std::string scan_csv(const ScanResult& result);
inline constexpr std::string_view kScanCsvHeader = "T_K,dx_m,tau_g_s,tau_tc_s,ratio,dominant";

/// Sidecar document; `preset` may be empty.
nlohmann::json scan_json(const ScanResult& result, std::string_view preset);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Indented dump with a trailing newline; infinities and NaN become null.
std::string dump(const nlohmann::json& doc);

}  // namespace deco::report

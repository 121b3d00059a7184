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

#include <cmath>
#include <filesystem>
#include <limits>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>
#include <unistd.h>

#include "deco/cli.hpp"
#include "deco/report_json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run deco_run(std::vector<std::string> args) {
  args.insert(args.begin(), "deco");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = deco::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("deco_cli_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("compute anchors") {
  auto r = deco_run({"compute", "--material", "sapphire", "--radius", "1e-6", "--temp", "1", "--dx", "1e-3",
                     "--cv-model", "debye", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema_version"] == deco::report::kSchemaVersion);
  CHECK(std::abs(j["tau_g_s"].get<double>() / 6.9e5 - 1) < 0.1);
  CHECK(j["channels"].size() == 4);
  CHECK(j["channels"][0].contains("regime"));
  CHECK(j.contains("tau_tc_s"));
  CHECK(j["dominant"].is_boolean());

  r = deco_run({"compute", "--material", "sapphire", "--radius", "1e-6", "--temp", "1", "--dx", "1e-3", "--cv-model",
                "einstein", "--json"});
  j = json::parse(r.out);
  CHECK(std::abs(j["tau_g_s"].get<double>() / 1.8e2 - 1) < 0.1);

  r = deco_run({"compute", "--preset", "fullerene", "--json"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["input"]["temp_int_K"] == 900.0);
  CHECK(j["input"]["temp_env_K"] == 300.0);
}

TEST_CASE("compute human table") {
  const auto r = deco_run({"compute", "--preset", "sapphire", "--pressure", "1e-17mbar"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("tau_G [debye]  6.97e+05 s") != std::string::npos);
  CHECK(r.out.find("collisions") != std::string::npos);
  CHECK(r.out.find("P 1.00e-15 Pa") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto r = deco_run({"compute", "--material", "unobtainium"});
  CHECK(r.code == deco::cli::kResolution);
  CHECK(r.err.find("unobtainium") != std::string::npos);

  r = deco_run({"compute", "--radius", "-1"});
  CHECK(r.code == deco::cli::kDomain);

  r = deco_run({"compute", "--temp", "1", "--temp-gas", "0"});
  CHECK(r.code == deco::cli::kDomain);
  CHECK(r.err.find("collisions") != std::string::npos);

  r = deco_run({"compute", "--cv-model", "nope"});
  CHECK(r.code == deco::cli::kDomain);

  r = deco_run({"scan", "--grid", "2x2", "--out", "/nonexistent-dir/x.csv"});
  CHECK(r.code == deco::cli::kIo);

  r = deco_run({"frobnicate"});
  CHECK(r.code == deco::cli::kUsage);

  r = deco_run({"--help"});
  CHECK(r.code == 0);
}

TEST_CASE("scan output files") {
  TempDir tmp;
  const auto csv = tmp.path / "scan.csv";
  const auto r = deco_run({"scan", "--grid", "2x2", "--t-range", "1:10", "--dx-range", "1e-3:1e-2", "--out",
                           csv.string()});
  REQUIRE(r.code == 0);
  const std::string text = slurp(csv);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "T_K,dx_m,tau_g_s,tau_tc_s,ratio,dominant");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);
  CHECK(text.find("1.00000000e+00,1.00000000e-02,") != std::string::npos);

  const auto side = json::parse(slurp(tmp.path / "scan.json"));
  CHECK(side["schema_version"] == deco::report::kSchemaVersion);
  CHECK(side["grid"]["temperature_K"]["count"] == 2);
  CHECK(side["region_count"] == 0);
  CHECK(side["invalid_count"] == 0);
  CHECK(side["temperature_tracking"]["photon"] == "grid");
  CHECK(side["markers"]["max_demonstrated_dx_m"] == 0.54);
  CHECK(side["contours"].empty());
  CHECK_FALSE(fs::exists(tmp.path / "scan.csv.tmp"));
}

TEST_CASE("scan is byte-reproducible across thread counts") {
  TempDir tmp;
  std::vector<std::string> base{"scan", "--radius", "1e-8", "--grid", "40x50"};
  auto with = [&](const std::string& name, const std::string& threads) {
    auto a = base;
    a.insert(a.end(), {"--out", (tmp.path / (name + ".csv")).string(), "--threads", threads});
    REQUIRE(deco_run(a).code == 0);
  };
  with("a", "1");
  with("b", "4");
  with("c", "0");
  CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
  CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "c.csv"));
  CHECK(slurp(tmp.path / "a.json") == slurp(tmp.path / "b.json"));
  CHECK(slurp(tmp.path / "a.json") == slurp(tmp.path / "c.json"));
  CHECK(json::parse(slurp(tmp.path / "a.json"))["region_count"] == 2);
}

TEST_CASE("scan pins") {
  TempDir tmp;
  const auto r = deco_run({"scan", "--grid", "3x3", "--temp-env", "300", "--out", (tmp.path / "p.csv").string(),
                           "--json", (tmp.path / "side.json").string()});
  REQUIRE(r.code == 0);
  const auto side = json::parse(slurp(tmp.path / "side.json"));
  CHECK(side["temperature_tracking"]["photon"] == 300.0);
  CHECK(side["temperature_tracking"]["gas"] == "grid");
}

TEST_CASE("table1, materials and oracle subcommands") {
  auto r = deco_run({"table1", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rows"][0]["preset"] == "atoms");
  CHECK(j["rows"][0]["comparisons"][0]["computed_decade"] == 29);

  r = deco_run({"table1"});
  CHECK(r.out.find("atoms") != std::string::npos);

  r = deco_run({"materials", "show", "sapphire"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1047 K") != std::string::npos);
  r = deco_run({"materials", "show", "sapphire", "--json"});
  CHECK(json::parse(r.out)["debye_temperature_K"] == 1047.0);
  r = deco_run({"materials", "list"});
  CHECK(r.out.find("fullerene") != std::string::npos);
  r = deco_run({"materials", "show", "kryptonite"});
  CHECK(r.code == deco::cli::kResolution);

  TempDir tmp;
  const auto out = tmp.path / "oracle.json";
  r = deco_run({"oracle", "verify", "--out", out.string()});
  REQUIRE(r.code == 0);
  j = json::parse(slurp(out));
  CHECK(j["all_passed"] == true);
  CHECK(j["model2"]["entries"].size() == 6);
  CHECK(j["model2"]["entries"][0]["discrepancy"] == true);
}

TEST_CASE("catalog override") {
  TempDir tmp;
  const auto path = tmp.path / "extra.ini";
  std::ofstream(path) << "[material glass]\nmass_density = 2500\ndebye_temperature = 400\n"
                         "permittivity = 4+1e-3i\nmolar_mass = 0.06\n";
  auto r = deco_run({"compute", "--catalog", path.string(), "--material", "glass", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["input"]["material"] == "glass");
  r = deco_run({"materials", "--catalog", path.string(), "show", "glass"});
  CHECK(r.code == 0);
  r = deco_run({"compute", "--catalog", (tmp.path / "missing.ini").string()});
  CHECK(r.code == deco::cli::kResolution);
}

TEST_CASE("round9") {
  CHECK(deco::report::round9(0.1 + 0.2) == 0.3);
  CHECK(deco::report::round9(6.97123456789e5) == 6.97123457e5);
  CHECK(std::isinf(deco::report::round9(HUGE_VAL)));
  CHECK(json(std::numeric_limits<double>::infinity()).dump() == "null");
}

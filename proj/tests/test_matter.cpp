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
#include <random>
#include <string>

#include <doctest.h>

#include "deco/catalog.hpp"
#include "deco/constants.hpp"
#include "deco/errors.hpp"
#include "deco/matter.hpp"
#include "test_util.hpp"

using namespace deco;
using deco::testing::rel;

TEST_CASE("molecule count") {
  const Material& sapphire = builtin_catalog().material("sapphire");
  const double n = molecule_count(1e-6, sapphire);
  // (4/3) pi (1e-6)^3 * 4000 * N_A / 0.10196
  const double direct = 4.0 / 3.0 * constants::pi * 1e-18 * 4000.0 * 6.02214076e23 / 0.10196;
  CHECK(rel(n, direct) < 1e-14);
  CHECK(rel(n, 9.9e10) < 0.02);
  CHECK(n / 1e11 < 1.5);
  CHECK(1e11 / n < 1.5);
  CHECK(molecule_count(0.0, sapphire) == 0.0);
  CHECK_THROWS_AS(molecule_count(-1.0, sapphire), DomainError);

  SUBCASE("r^3 scaling") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      const double r = deco::testing::log_uniform(rng, 1e-10, 1e-1);
      CHECK(rel(molecule_count(2 * r, sapphire), 8 * molecule_count(r, sapphire)) < 1e-15);
    }
  }
}

TEST_CASE("degrees of freedom") {
  SystemSpec s{1e-6, builtin_catalog().material("sapphire"), 1.0, 1e-3, std::nullopt};
  CHECK(degrees_of_freedom(s) == 3 * molecule_count(1e-6, s.material));
  s.molecule_count_override = 60.0;
  CHECK(degrees_of_freedom(s) == 180.0);
}

TEST_CASE("gas number density") {
  CHECK(rel(gas_number_density(1e-15, 300.0), 2.414e5) < 1e-3);
  CHECK(rel(gas_number_density(1e-15, 0.03), 2.414e9) < 1e-3);
  CHECK(gas_number_density(0.0, 300.0) == 0.0);
  CHECK_THROWS_AS(gas_number_density(1e-15, 0.0), DomainError);
}

TEST_CASE("gas mixture invariants") {
  const GasSpecies n2{"N2", 4.652e-26}, o2{"O2", 5.314e-26};
  CHECK_NOTHROW(GasMixture({{n2, 0.78}, {o2, 0.22}}));
  CHECK_NOTHROW(GasMixture({{n2, 0.5}, {o2, 0.5 + 5e-10}}));
  CHECK_THROWS_AS(GasMixture({{n2, 0.78}, {o2, 0.2}}), DomainError);
  CHECK_THROWS_AS(GasMixture({{n2, 0.0}, {o2, 1.0}}), DomainError);
  CHECK_THROWS_AS(GasMixture({{n2, 1.2}}), DomainError);
  CHECK_THROWS_AS(GasMixture({{GasSpecies{"X", 0.0}, 1.0}}), DomainError);
}

TEST_CASE("validation of system and environment") {
  const Material& m = builtin_catalog().material("sapphire");
  CHECK_THROWS_AS(validate(SystemSpec{0.0, m, 1.0, 1e-3, std::nullopt}), DomainError);
  CHECK_THROWS_AS(validate(SystemSpec{1e-6, m, -1.0, 1e-3, std::nullopt}), DomainError);
  CHECK_THROWS_AS(validate(SystemSpec{1e-6, m, 1.0, -1e-3, std::nullopt}), DomainError);
  CHECK_NOTHROW(validate(SystemSpec{1e-6, m, 0.0, 0.0, std::nullopt}));
  Environment e;
  e.pressure = -1.0;
  CHECK_THROWS_AS(validate(e), DomainError);
  Material bad = m;
  bad.permittivity.im = -1.0;
  CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("built-in catalog") {
  const Catalog& c = builtin_catalog();
  const Material& s = c.material("sapphire");
  CHECK(s.debye_temperature == 1047.0);
  CHECK(s.mass_density == 4.0e3);
  CHECK(s.permittivity == ComplexPermittivity{10.0, 1e-9});
  CHECK(c.material("fullerene").debye_temperature == 185.0);
  CHECK(c.material("fullerene").permittivity == ComplexPermittivity{4.4, 1e-3});
  CHECK(c.material("rubidium-87").permittivity == ComplexPermittivity{0.3, 0.1});

  const GasMixture air = c.gas("air");
  REQUIRE(air.components().size() == 2);
  CHECK(air.components()[0].species.name == "N2");
  CHECK(air.components()[0].fraction == 0.78);
  CHECK(air.components()[1].species.name == "O2");
  CHECK(air.components()[1].fraction == 0.22);
  CHECK(c.gas("N2").components().size() == 1);

  for (const char* name : {"atoms", "fullerene", "micro-particles", "diamonds", "macro-particles", "sapphire"}) {
    CAPTURE(name);
    const auto& p = c.preset(name);
    CHECK_NOTHROW(validate(c.system_for(p)));
    CHECK_NOTHROW(validate(c.environment_for(p)));
  }
  const auto& f = c.preset("fullerene");
  CHECK(f.internal_temperature == 900.0);
  CHECK(f.photon_temperature == 300.0);
  CHECK(c.preset("atoms").pressure == 1e-15);
  CHECK(rel(c.preset("macro-particles").pressure, 5e-5) < 1e-15);
  CHECK(c.preset("micro-particles").material == "niobium");
  CHECK(c.preset("macro-particles").material == "silica");
  CHECK(c.preset("atoms").molecule_count == 1.0);
}

TEST_CASE("unknown names are resolution errors") {
  const Catalog& c = builtin_catalog();
  CHECK_THROWS_AS(c.material("unobtainium"), ResolutionError);
  CHECK_THROWS_AS(c.gas("phlogiston"), ResolutionError);
  CHECK_THROWS_AS(c.preset("nope"), ResolutionError);
  try {
    c.material("unobtainium");
  } catch (const ResolutionError& e) {
    CHECK(std::string(e.what()).find("unobtainium") != std::string::npos);
  }
}

TEST_CASE("catalog round trip") {
  const Catalog& c = builtin_catalog();
  CHECK(parse_catalog(serialize_catalog(c)) == c);

  SUBCASE("randomized materials survive bit-exactly") {
    std::mt19937_64 rng(5);
    Catalog extra;
    for (int i = 0; i < 25; ++i) {
      Material m;
      m.name = "m" + std::to_string(i);
      m.mass_density = deco::testing::log_uniform(rng, 1e-3, 1e5);
      m.debye_temperature = deco::testing::log_uniform(rng, 1e-2, 1e4);
      m.permittivity = {deco::testing::log_uniform(rng, 1e-3, 1e3) - 2.0 + 1e-7,
                        deco::testing::log_uniform(rng, 1e-12, 1e2)};
      m.molar_mass = deco::testing::log_uniform(rng, 1e-3, 10.0);
      extra.add(m);
    }
    CHECK(parse_catalog(serialize_catalog(extra)) == extra);
  }
}

TEST_CASE("catalog override and errors") {
  const std::string text =
      "[material sapphire]\nmass_density = 3980\ndebye_temperature = 1047\npermittivity = 10+1e-9i\n"
      "molar_mass = 0.10196\n[mixture dry]\nN2 = 1\n";
  Catalog c = builtin_catalog();
  c.merge(parse_catalog(text, builtin_catalog()));
  CHECK(c.material("sapphire").mass_density == 3980.0);
  CHECK(c.gas("dry").components().size() == 1);
  CHECK(c.material("diamond") == builtin_catalog().material("diamond"));

  CHECK_THROWS_AS(parse_catalog("[material x]\nmass_density = -1\n"), DomainError);
  CHECK_THROWS_AS(parse_catalog("[material x\n"), DomainError);
  try {
    parse_catalog("# c\n\n[material x]\nmass_density = oops\n");
    FAIL("expected a parse error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

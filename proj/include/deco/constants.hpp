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

// CODATA 2018 exact / recommended SI values.

namespace deco::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double c = 299792458.0;            // m / s
inline constexpr double k_B = 1.380649e-23;         // J / K
inline constexpr double g_earth = 9.80665;          // m / s^2, standard gravity
inline constexpr double N_A = 6.02214076e23;        // 1 / mol

// Riemann zeta at the three arguments that appear in the thermal and
// Bose-Einstein moment formulas. Checked against a series oracle in tests.
inline constexpr double zeta_3_2 = 2.6123753486854883433;
inline constexpr double zeta_3 = 1.2020569031595942854;
inline constexpr double zeta_9 = 1.0020083928260822144;

}  // namespace deco::constants

namespace deco {

/// Read-only view of the physical constants used by every model.
struct PhysConstants {
  double hbar = constants::hbar;
  double c = constants::c;
  double k_B = constants::k_B;
  double g_earth = constants::g_earth;
  double N_A = constants::N_A;
};

inline constexpr PhysConstants kConstants{};

}  // namespace deco

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

#include "deco/formula_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace deco {

namespace {

std::string sci2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1e", v);
  return buf;
}

std::string verdict(const oracle::VerificationReport& report, const std::string& prefix) {
  int total = 0, passed = 0;
  double tol = 0.0;
  for (const auto& c : report.comparisons) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    ++total;
    passed += c.pass ? 1 : 0;
    tol = c.tolerance;
  }
  if (total == 0) return "no oracle run";
  std::string s = passed == total ? "quadrature oracle agrees" : "QUADRATURE ORACLE DISAGREES";
  return s + " (" + std::to_string(passed) + "/" + std::to_string(total) + " points within " + sci2(tol) + ")";
}

std::string model2_verdict(const oracle::VerificationReport& report) {
  if (report.model2.empty()) return "no oracle run";
  const bool all_flagged = std::all_of(report.model2.begin(), report.model2.end(),
                                       [](const oracle::Model2Entry& e) { return e.discrepancy; });
  const auto& first = report.model2.front();
  std::string s = all_flagged ? "closed form disagrees with its defining integral at every tested lambda"
                              : "closed form disagrees with its defining integral at some tested lambda";
  return s + " (" + sci2(first.relative_deviation) + " at lambda = " + sci2(first.lambda_cv) +
         "); the engine returns the integral";
}

}  // namespace

std::vector<FormulaMapEntry> formula_map_entries(const oracle::VerificationReport& report) {
  const std::string closed = "closed form";
  return {
      {"zeta", "Riemann zeta at 3/2, 3, 9", "tabulated constants", "checked against a direct series with Euler-Maclaurin tail"},
      {"clausius_mossotti", "Clausius-Mossotti factor", "(eps - 1)/(eps + 2)", closed},
      {"erfcx", "scaled complementary error function", "exp(x^2) erfc(x), erfc(z) = 1 - 2/sqrt(pi) int_0^z exp(-t^2) dt",
       "checked against direct quadrature and the asymptotic series"},
      {"molecule_count", "molecules in a homogeneous sphere", "N_m = 4 pi r^3 n / 3, n = rho N_A / M", closed},
      {"degrees_of_freedom", "harmonic degrees of freedom", "N = 3 N_m", closed},
      {"gas_number_density", "ideal gas law", "n_gas = P / (k_B T)", closed},
      {"heat_capacity(einstein)", "classical heat capacity", "C_V = N k_B", closed},
      {"heat_capacity(debye)", "Debye heat capacity, T << T_D", "C_V = (4 pi^4 / 5) N k_B (T/T_D)^3",
       "checked against the full Debye integral at T = 0.01 T_D"},
      {"tau_g_general", "time-dilation decoherence time", "tau_G = sqrt(2) hbar c^2 / (sqrt(k_B C_V) g T dx)", closed},
      {"tau_g_einstein", "time-dilation decoherence, classical C_V", "tau_G^E = sqrt(2) hbar c^2 / (sqrt(N) g k_B T dx)",
       "equals tau_g_general with C_V = N k_B"},
      {"tau_g_debye", "time-dilation decoherence, Debye C_V",
       "tau_G^D = (1/pi^2) sqrt(5/(2N)) hbar c^2 T_D^{3/2} / (g k_B T^{5/2} dx)",
       "equals tau_g_general with the Debye low-T C_V"},
      {"model_crossover", "Debye / Einstein crossover", "T_eq / T_D = (sqrt(5)/(2 pi^2))^{2/3}",
       "checked against bisection on the time ratio"},
      {"coherence_factor", "off-diagonal decay", "rho(x,y,t) = rho(x,y,0) exp(-t/tau_TC)", closed},
      {"tau_tc", "combined thermal + collisional time", "tau_TC = (sum_i gamma_i tanh(dx^2 Lambda_i / gamma_i))^{-1}", closed},
      {"lambda_scatt", "thermal photon scattering",
       "Lambda = 8! 8 zeta(9) c r^6 / (9 pi) (k_B T / hbar c)^9 (Re CM)^2", closed},
      {"lambda_em(1)", "thermal emission, homogeneous sphere",
       "Lambda = 16 pi^5 c r^3 / 189 (k_B T / hbar c)^6 Im CM", closed},
      {"lambda_em(2)", "thermal emission with internal structure",
       "Lambda = 4 c r^3 / pi (k_B T / hbar c)^6 Im CM lambda^3 [2(lambda+1)(lambda+8) + lambda^{1/2}(lambda^2+10 lambda+15) "
       "erfcx(sqrt(lambda/2))], lambda = C_V / k_B",
       model2_verdict(report)},
      {"lambda_abs", "thermal absorption", "same form as lambda_em at the photon temperature", closed},
      {"gamma_thermal", "thermal event rate", "gamma = (2/pi) zeta(3) c r^2 (k_B T / hbar c)^3", closed},
      {"lambda_coll", "collisional localization (Bose-Einstein gas)",
       "Lambda = 8 sqrt(2 pi) zeta(3) / (3 zeta(3/2)) P r^2 / hbar^2 sqrt(m k_B T)", verdict(report, "lambda_coll")},
      {"gamma_coll", "collisional event rate", "gamma = 16 sqrt(3) zeta(3/2) P r^2 / sqrt(m k_B T)",
       "equals 16 pi sqrt(2 pi)/sqrt(3) P r^2 / <p>"},
      {"photon_number", "photon statistics with internal structure",
       "N(k) = 2 exp[-x - x^2 / (2 lambda)], x = hbar c k / (k_B T)", "oracle"},
      {"lambda_em2_numeric", "emission defining integral",
       "c int k^2 N(k) g(k) sigma(k) dk, g = k^2/pi^2, sigma = 4 pi Im CM k r^3", "oracle"},
      {"bose_einstein_momentum_pdf", "Bose-Einstein momentum density",
       "nu(p) = sqrt(2/pi) / (zeta(3/2) (m k_B T)^{3/2}) p^2 / (exp(p^2/(2 m k_B T)) - 1)",
       verdict(report, "nu_normalization")},
      {"momentum_moment(1)", "mean momentum", "<p> = pi sqrt(2 pi) / (3 zeta(3/2)) sqrt(m k_B T)",
       verdict(report, "moment_p1")},
      {"momentum_moment(3)", "third momentum moment", "<p^3> = 8 sqrt(2/pi) zeta(3)/zeta(3/2) (m k_B T)^{3/2}",
       verdict(report, "moment_p3")},
      {"lambda_coll_numeric", "geometric-cross-section collisional rate",
       "Lambda = pi r^2 n_gas / (3 hbar^2 m) <p^3>", "oracle"},
  };
}

std::string render_formula_map(const oracle::VerificationReport& report) {
  std::ostringstream out;
  out << "<!--\n"
      << "Copyright 2026 The deco Authors\n\n"
      << "Licensed under the Apache License, Version 2.0 (the \"License\");\n"
      << "you may not use this file except in compliance with the License.\n"
      << "You may obtain a copy of the License at\n\n"
      << "    http://www.apache.org/licenses/LICENSE-2.0\n\n"
      << "Unless required by applicable law or agreed to in writing, software\n"
      << "distributed under the License is distributed on an \"AS IS\" BASIS,\n"
      << "WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n"
      << "See the License for the specific language governing permissions and\n"
      << "limitations under the License.\n"
      << "-->\n\n"
      << "# Formula map\n\n"
      << "Generated by `deco_formula_map`; regenerate after changing any rate formula.\n\n"
      << "| operation | formula | expression | status |\n"
      << "|---|---|---|---|\n";
  for (const auto& e : formula_map_entries(report)) {
    out << "| `" << e.operation << "` | " << e.formula << " | `" << e.expression << "` | " << e.status << " |\n";
  }
  out << "\n## Recorded discrepancies\n\n"
      << "1. Model-2 emission. The bracket form above does not reproduce its own defining integral. "
      << "Reducing the integral exactly gives\n"
      << "   `lambda^3 [2(lambda+1)(lambda+8) - sqrt(2 pi lambda)(lambda^2+10 lambda+15) erfcx(sqrt(lambda/2))]`,\n"
      << "   i.e. the opposite sign and an extra sqrt(2 pi) on the erfcx term. The engine keeps the bracket form as\n"
      << "   the closed form, compares it with the integral, and returns the integral when they differ by more than 1e-6.\n"
      << "   At large lambda the bracket form grows as lambda^{11/2}, while the integral levels off at\n"
      << "   `(4 c r^3 / pi) Im CM 240 (k_B T / hbar c)^6`.\n\n"
      << "   | lambda | closed / integral - 1 | exact reduction / integral - 1 |\n"
      << "   |---|---|---|\n";
  for (const auto& e : report.model2) {
    out << "   | " << sci2(e.lambda_cv) << " | " << sci2((e.closed_form - e.integral) / e.integral) << " | "
        << (std::isnan(e.exact_reduction) ? std::string("n/a (cancellation)")
                                          : (e.reduction_deviation < 1e-9 ? std::string("< 1e-9")
                                                                          : sci2(e.reduction_deviation)))
        << " |\n";
  }
  out << "\n2. Emission cross section. The cross section is sometimes written with the product\n"
      << "   `Im[(eps - 1)(eps + 2)]`; every formula here uses the Clausius-Mossotti quotient `(eps - 1)/(eps + 2)`.\n";
  return out.str();
}

std::string generate_formula_map() { return render_formula_map(oracle::verify_all()); }

}  // namespace deco

#include <cstdio>
#include <cmath>
#include "iongate/constants.hpp"
#include "iongate/design.hpp"
#include "iongate/merit.hpp"

using namespace iongate;

int main() {
  const auto be = load_species("be9");
  const auto diag = level_energies(be, 4.46);
  const auto lin = level_energies_linear_zeeman(be, 4.46);

  // P-level offsets (GHz, relative to zero-field P3/2, ground offset removed)
  std::printf("levels (rel zero-field P3/2, GHz):\n");
  for (auto m : {Manifold::P12, Manifold::P32}) {
    for (int tm : {-3, -1, 1, 3}) {
      if (m == Manifold::P12 && std::abs(tm) == 3) continue;
      std::printf("  %s mJ=%+d/2: diag %9.3f   lin %9.3f\n",
                  m == Manifold::P12 ? "P12" : "P32", tm,
                  to_ghz(diag.level(m, tm).omega - diag.delta_z) - to_ghz(be.omega0),
                  to_ghz(lin.level(m, tm).omega - lin.delta_z) - to_ghz(be.omega0));
    }
  }

  for (const auto* sch : {&diag, &lin}) {
    std::printf("%s:\n", sch == &diag ? "diag" : "lin");
    for (double d : {-5.29, -142.6, -163.2, -267.45, -288.05, 299.3, 431.4, 306.55}) {
      const auto c = stark_coefficients(*sch, be, from_ghz(d), 1.0);
      const double dA = c.a_up - c.a_down, dB = c.b_up - c.b_down;
      const double sA = c.a_up + c.a_down, sB = c.b_up + c.b_down;
      double phin = (dA * dB < 0) ? rad_to_deg(std::atan(std::sqrt(-dA / dB))) : -1.0;
      double phif = (sA * sB > 0) ? rad_to_deg(std::atan(std::sqrt(sA / sB))) : -1.0;
      std::printf("  D=%8.2f: dA=%+.4e dB=%+.4e phi_null=%6.2f | sA=%+.4e sB=%+.4e phi_F=%6.2f\n",
                  d, dA, dB, phin, sA, sB, phif);
    }
    // gap scan over [-15, 0]
    std::printf("  gap scan: ");
    for (double d = -14.0; d <= -1.0; d += 1.0) {
      auto a = acss_null_angle(*sch, be, from_ghz(d));
      auto f = balanced_force_angle(*sch, be, from_ghz(d));
      if (a && f) std::printf("%.0f:%+.2f ", d, rad_to_deg(*a) - rad_to_deg(*f));
      else std::printf("%.0f:-- ", d);
    }
    std::printf("\n");
    // MS1 roots, all three ratios, wide window
    for (double ratio : {1.0, std::sqrt(2.0), 1.0 / std::sqrt(2.0)}) {
      auto roots = ms_null_detunings(*sch, be, ratio, from_ghz(-250), from_ghz(250));
      std::printf("  MS1 roots (ratio %.3f): ", ratio);
      for (double r : roots) std::printf("%.2f ", to_ghz(r));
      std::printf("\n");
    }
  }
  return 0;
}

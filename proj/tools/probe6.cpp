// Where do the published null angles actually occur in each model?
#include <cstdio>
#include <cmath>
#include <optional>
#include "iongate/constants.hpp"
#include "iongate/design.hpp"

using namespace iongate;

int main() {
  const auto be = load_species("be9");
  const auto diag = level_energies(be, 4.46);
  const auto lin = level_energies_linear_zeeman(be, 4.46);
  const double targets[] = {39.3, 41.5, 65.25, 70.5, 83.5};

  for (const auto* sch : {&diag, &lin}) {
    std::printf("=== %s ===\n", sch == &diag ? "diag" : "lin");
    for (double target : targets) {
      std::printf("phi=%5.2f at: ", target);
      double prev = 0; bool have = false;
      for (double d = -320; d <= 520; d += 0.01) {
        std::optional<double> a;
        try { a = acss_null_angle(*sch, be, from_ghz(d)); } catch (...) { a.reset(); }
        if (!a) { have = false; continue; }
        const double v = rad_to_deg(*a) - target;
        if (have && (prev >= 0) != (v >= 0)) std::printf("%.2f ", d);
        prev = v; have = true;
      }
      std::printf("\n");
    }
    // where does the balance angle equal the null angle (joint curve)?
    std::printf("joint crossings: ");
    double prev = 0; bool have = false;
    for (double d = -320; d <= 520; d += 0.01) {
      std::optional<double> a, f;
      try { a = acss_null_angle(*sch, be, from_ghz(d)); f = balanced_force_angle(*sch, be, from_ghz(d)); } catch (...) { a.reset(); }
      if (!a || !f) { have = false; continue; }
      const double v = *a - *f;
      if (have && (prev >= 0) != (v >= 0)) std::printf("%.2f ", d);
      prev = v; have = true;
    }
    std::printf("\n");
  }
  return 0;
}

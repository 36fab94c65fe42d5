// Rate-component decomposition at each reference operating point.
#include <cstdio>
#include <cmath>
#include "iongate/constants.hpp"
#include "iongate/design.hpp"
#include "iongate/merit.hpp"

using namespace iongate;

static double origin_shift(const IonSpecies& s, double B) {
  const auto diag = level_energies(s, B);
  const auto lin = level_energies_linear_zeeman(s, B);
  return 0.5 * ((diag.level(Manifold::P32, 1).omega - lin.level(Manifold::P32, 1).omega) +
                (diag.level(Manifold::P32, -1).omega - lin.level(Manifold::P32, -1).omega));
}

int main() {
  const auto be = load_species("be9");
  const auto scheme = level_energies(be, 4.46);
  const double u = origin_shift(be, 4.46);
  auto code = [&](double d) { return from_ghz(d) + u; };
  const double g0 = single_photon_rabi(1.0, be);

  struct Row { const char* name; GateConfiguration cfg; double zeta_ref; };
  const double bpi3 = std::sqrt(2.0 / 1.5);
  Row rows[] = {
    {"row1 LS  -5.29", ls_config(code(-5.29), deg_to_rad(65.25)), 1066.9},
    {"row2 LS  299.3", ls_config(code(299.3), deg_to_rad(70.5)), 3440.9},
    {"row3 MS1 -163.2", ms1_config(code(-163.2), bpi3 / std::sqrt(2.0), bpi3), 1769.7},
    {"row4 MS2 -142.6", ms2_config(code(-142.6), deg_to_rad(39.3), deg_to_rad(-41.5)), 1041.2},
    {"row5 MS2  431.4", ms2_config(code(431.4), deg_to_rad(83.5), deg_to_rad(71.0)), 9512.9},
  };
  for (const auto& r : rows) {
    const auto rates = scattering_rates(scheme, be, r.cfg, g0);
    double strength;
    if (r.cfg.gate == GateType::LS) {
      const auto c = stark_coefficients(scheme, be, r.cfg.detuning, g0);
      strength = std::abs(spin_forces(c, r.cfg.phi_p, 1.0).f0);
    } else {
      strength = std::abs(raman_rabi(scheme, be, r.cfg, g0));
    }
    const double gate_gamma = (r.cfg.gate == GateType::LS) ? rates.gamma_ls : rates.gamma_ms;
    const double zeta = strength / gate_gamma;
    std::printf("%s: S=%.5e Gud=%.4e Gdu=%.4e Gel=%.4e | el/r=%.3f zeta=%7.1f ref=%7.1f mine/ref=%.4f\n",
                r.name, strength, rates.gamma_ud, rates.gamma_du, rates.gamma_el,
                rates.gamma_el / rates.gamma_r, zeta, r.zeta_ref, zeta / r.zeta_ref);
    // variants
    const double r_only = (r.cfg.gate == GateType::LS) ? 0.5 * rates.gamma_r : 0.75 * rates.gamma_r;
    std::printf("    variants: no-el %.4f | gamma19.4 %.4f | no-el+19.4 %.4f | S/ref-gamma %.4f\n",
                strength / r_only / r.zeta_ref,
                zeta * (17.0/19.4) / r.zeta_ref,
                strength / r_only * (17.0/19.4) / r.zeta_ref,
                zeta / r.zeta_ref * (r.cfg.gate == GateType::LS ? 1.0 : 1.0));
  }
  return 0;
}

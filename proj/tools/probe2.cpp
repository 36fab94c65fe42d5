// Probe: which level-energy model reproduces the published anchors?
#include <cstdio>
#include <cmath>
#include "iongate/constants.hpp"
#include "iongate/design.hpp"
#include "iongate/merit.hpp"

using namespace iongate;

static void report(const LevelScheme& scheme, const IonSpecies& be, const char* tag) {
  const auto geom = make_geometry(be, deg_to_rad(20.0), 1e-3);
  try {
    const auto joint = joint_operating_point(scheme, be, from_ghz(-15), from_ghz(0));
    const auto reqs = gate_requirements(joint, be, geom, from_mhz(1.59), 1e-3);
    // zeta_q0 at this scheme's own joint point (not the cached diag one):
    const double g0 = single_photon_rabi(1.0, be);
    const auto coeffs = stark_coefficients(scheme, be, joint.config.detuning, g0);
    const auto f = spin_forces(coeffs, joint.config.phi_p, 1.0);
    const auto rates = scattering_rates(scheme, be, joint.config, g0);
    std::printf("%s: joint Delta = %.4f GHz, phi = %.4f deg, zeta_l = %.2f, zq0/I = %.1f, P = %.3f mW\n",
                tag, to_ghz(joint.config.detuning), rad_to_deg(joint.config.phi_p),
                joint.merit.zeta_l, f.f0 * f.f0 / rates.gamma_ls, reqs.total_power * 1e3);
  } catch (const std::exception& e) {
    std::printf("%s: FAILED %s\n", tag, e.what());
  }
  // MS1 null
  auto roots = ms_null_detunings(scheme, be, std::sqrt(2.0), from_ghz(-200), from_ghz(-100));
  for (double r : roots) {
    const double b_pi = std::sqrt(2.0 / 3.0);
    auto p = evaluate_point(scheme, be, ms1_config(r, std::sqrt(2.0) * b_pi, b_pi));
    std::printf("   MS1 null: %.3f GHz  zeta_l = %.2f\n", to_ghz(r), p.merit.zeta_l);
  }
  auto a = ms_null_angles(scheme, be, from_ghz(-142.6));
  if (a) std::printf("   MS2 @-142.6: phi_sb = %.3f, phi_c = %.3f\n",
                     rad_to_deg(a->phi_sb), rad_to_deg(a->phi_c));
  auto a5 = ms_null_angles(scheme, be, from_ghz(431.4));
  if (a5) std::printf("   MS2 @431.4: phi_sb = %.3f, phi_c = %.3f\n",
                      rad_to_deg(a5->phi_sb), rad_to_deg(a5->phi_c));
}

int main() {
  const auto be = load_species("be9");
  const auto diag = level_energies(be, 4.46);
  const auto lin = level_energies_linear_zeeman(be, 4.46);
  report(diag, be, "diag");
  report(lin, be, "lin ");
  return 0;
}

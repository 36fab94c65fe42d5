// Scratch numerical probe (not installed).
#include <cstdio>
#include <cmath>
#include "iongate/asymptotics.hpp"
#include "iongate/constants.hpp"
#include "iongate/design.hpp"
#include "iongate/merit.hpp"

using namespace iongate;

int main() {
  const auto be = load_species("be9");
  const auto scheme = level_energies(be, 4.46);
  std::printf("qubit splitting @4.46T: %.4f GHz\n", to_ghz(scheme.qubit_splitting));

  // Joint LS operating point
  const auto joint = joint_operating_point(scheme, be, from_ghz(-15), from_ghz(0));
  std::printf("joint: Delta = %.4f GHz, phi = %.4f deg\n",
              to_ghz(joint.config.detuning), rad_to_deg(joint.config.phi_p));
  std::printf("zeta_l(joint) = %.2f, zeta_q_norm = %.6f, resid = %.3e\n",
              joint.merit.zeta_l, joint.merit.zeta_q_normalized, joint.residual_acss);
  std::printf("zeta_q0/I = %.2f m^2/(W s)\n", nist_zeta_q0_unit_intensity());

  // Requirements at the joint point
  const auto geom = make_geometry(be, deg_to_rad(20.0), 1e-3);
  const auto reqs = gate_requirements(joint, be, geom, from_mhz(1.59), 1e-3);
  std::printf("power(joint,1ms,1mm) = %.3f mW, eta = %.4f, I = %.1f W/m^2\n",
              reqs.total_power * 1e3, reqs.eta, reqs.intensity);

  // Gate errors at theta_R = 90 deg
  {
    const auto geom90 = make_geometry(be, deg_to_rad(90.0), 1e-3);
    auto point = joint;
    const auto r90 = gate_requirements(point, be, geom90, from_mhz(1.59), 1e-3);
    const double g0 = single_photon_rabi(r90.intensity, be);
    const auto rates = scattering_rates(scheme, be, point.config, g0);
    std::printf("error(NIST, 90deg) = %.4e\n", gate_error(rates, 1e-3, GateType::LS));
    const auto geom20 = make_geometry(be, deg_to_rad(20.0), 1e-3);
    const auto r20 = gate_requirements(point, be, geom20, from_mhz(1.59), 1e-3);
    const double g020 = single_photon_rabi(r20.intensity, be);
    const auto rates20 = scattering_rates(scheme, be, point.config, g020);
    std::printf("error(NIST, 20deg) = %.4e, ratio = %.4f\n",
                gate_error(rates20, 1e-3, GateType::LS),
                gate_error(rates20, 1e-3, GateType::LS) / gate_error(rates, 1e-3, GateType::LS));
  }

  // LS null-branch peak near 300 GHz
  {
    double best = 0, bestz = -1;
    for (double d = 230; d <= 380; d += 0.1) {
      auto phi = acss_null_angle(scheme, be, from_ghz(d));
      if (!phi) continue;
      try {
        auto p = evaluate_point(scheme, be, ls_config(from_ghz(d), *phi));
        if (p.merit.zeta_l > bestz) { bestz = p.merit.zeta_l; best = d; }
      } catch (...) {}
    }
    auto phi = acss_null_angle(scheme, be, from_ghz(best));
    auto p = evaluate_point(scheme, be, ls_config(from_ghz(best), *phi));
    auto rq = gate_requirements(p, be, geom, from_mhz(1.59), 1e-3);
    std::printf("row2: Delta = %.2f GHz, phi = %.3f deg, zeta_l = %.1f, P = %.1f mW\n",
                best, rad_to_deg(*phi), p.merit.zeta_l, rq.total_power * 1e3);
    const auto g090 = single_photon_rabi(gate_requirements(p, be, make_geometry(be, deg_to_rad(90.0), 1e-3), from_mhz(1.59), 1e-3).intensity, be);
    const auto rates2 = scattering_rates(scheme, be, p.config, g090);
    std::printf("error(299.3-ish, 90deg) = %.4e\n", gate_error(rates2, 1e-3, GateType::LS));
  }

  // MS1 null at b_sigma = sqrt2 b_pi
  {
    auto roots = ms_null_detunings(scheme, be, std::sqrt(2.0), from_ghz(-200), from_ghz(-100));
    for (double r : roots) {
      const double b_pi = std::sqrt(2.0 / 3.0);
      auto p = evaluate_point(scheme, be, ms1_config(r, std::sqrt(2.0) * b_pi, b_pi));
      auto rq = gate_requirements(p, be, geom, from_mhz(1.59), 1e-3);
      std::printf("row3: root = %.3f GHz, zeta_l = %.2f, P = %.2f mW\n",
                  to_ghz(r), p.merit.zeta_l, rq.total_power * 1e3);
    }
  }

  // MS2 branches
  for (bool pos : {false, true}) {
    double lo = pos ? 350 : -200, hi = pos ? 500 : -100;
    double best = 0, bestz = -1;
    for (double d = lo; d <= hi; d += 0.1) {
      auto a = ms_null_angles(scheme, be, from_ghz(d));
      if (!a) continue;
      try {
        auto p = evaluate_point(scheme, be,
            ms2_config(from_ghz(d), a->phi_sb, (pos ? 1 : -1) * a->phi_c));
        if (p.merit.zeta_l > bestz) { bestz = p.merit.zeta_l; best = d; }
      } catch (...) {}
    }
    auto a = ms_null_angles(scheme, be, from_ghz(best));
    auto p = evaluate_point(scheme, be,
        ms2_config(from_ghz(best), a->phi_sb, (pos ? 1 : -1) * a->phi_c));
    auto rq = gate_requirements(p, be, geom, from_mhz(1.59), 1e-3);
    std::printf("row%c: Delta = %.2f GHz, phi_sb = %.3f, phi_c = %.3f, zeta_l = %.2f, P = %.2f mW\n",
                pos ? '5' : '4', best, rad_to_deg(a->phi_sb),
                (pos ? 1 : -1) * rad_to_deg(a->phi_c), p.merit.zeta_l, rq.total_power * 1e3);
  }

  // Species ratios at 100 THz, 4.5 T
  const auto ratios = species_ratio_report(be, load_species("mg24"), from_ghz(100000.0), 4.5);
  std::printf("species ratios: LS exact %.1f (scaling %.1f), MS exact %.2f (scaling %.2f)\n",
              ratios.ls_exact, ratios.ls_scaling, ratios.ms_exact, ratios.ms_scaling);

  // Far-detuned LS vertical ACSS (should be -5.4 kHz at any large Delta)
  {
    auto p = evaluate_point(scheme, be, ls_config(from_ghz(50000.0), 0.0));
    auto rq = gate_requirements(p, be, geom, from_mhz(1.59), 1e-3);
    std::printf("farLS: acss = %.4f kHz, P = %.1f mW, stability = %.3e\n",
                to_ghz(rq.acss_at_point) * 1e6, rq.total_power * 1e3,
                intensity_stability_bound(1e-3, rq.acss_at_point, 100));
  }

  // Asymptotics cross-checks
  {
    const auto lin = level_energies_linear_zeeman(be, 4.5);
    const auto diag = level_energies(be, 4.5);
    const double g0 = single_photon_rabi(1.0, be);
    for (double dthz : {50.0, 100.0}) {
      const double d = from_ghz(dthz * 1000.0);
      const auto in = asymptotic_inputs(be, 4.5, d, g0);
      // exact (diag + linear) LS vertical
      for (const auto* sch : {&diag, &lin}) {
        const auto rates = scattering_rates(*sch, be, ls_config(d, 0.0), g0);
        const auto coeffs = stark_coefficients(*sch, be, d, g0);
        const auto f = spin_forces(coeffs, 0.0, 1.0);
        std::printf("LS %s @%.0fTHz: F=%.6e approx %.6e | G=%.6e approx %.6e | zeta=%.1f approx %.1f\n",
                    sch == &diag ? "diag" : "lin ", dthz, std::abs(f.f0),
                    ls_force_approx(in).value, rates.gamma_ls, ls_gamma_approx(in).value,
                    std::abs(f.f0) / rates.gamma_ls, ls_merit_approx(in).value);
      }
      for (const auto* sch : {&diag, &lin}) {
        const auto cfg = ms1_config(d, 1.0, 1.0);
        const auto rates = scattering_rates(*sch, be, cfg, g0);
        const double om = raman_rabi(*sch, be, cfg, g0);
        std::printf("MS %s @%.0fTHz: Om=%.6e approx %.6e | G=%.6e approx %.6e | Gr=%.6e approx %.6e\n",
                    sch == &diag ? "diag" : "lin ", dthz, std::abs(om),
                    ms_rabi_approx(in).value, rates.gamma_ms, ms_gamma_approx(in).value,
                    rates.gamma_r, ms_raman_approx(in).value);
      }
    }
  }
  return 0;
}

#include "iongate/asymptotics.hpp"

#include <cmath>

#include "iongate/constants.hpp"
#include "iongate/merit.hpp"
#include "iongate/scatter.hpp"
#include "iongate/stark.hpp"

namespace iongate {

namespace {

bool in_range(const AsymptoticInputs& in) {
  return std::abs(in.delta_z / in.delta) < 0.1;
}

} // namespace

AsymptoticInputs asymptotic_inputs(const IonSpecies& species, double field_tesla,
                                   double delta, double g0) {
  AsymptoticInputs in;
  in.delta = delta;
  in.delta_z = kBohrMagneton * field_tesla / kHbar;
  in.omega_fs = species.omega_fs;
  in.g0 = g0;
  in.gamma = species.gamma;
  return in;
}

AsymptoticValue ls_force_approx(const AsymptoticInputs& in) {
  const double ratio = in.delta / (in.delta + in.omega_fs);
  const double value = (4.0 * in.g0 * in.g0 / 9.0) *
                       (in.delta_z / (in.delta * in.delta)) *
                       (1.0 + ratio * ratio);
  return {value, in_range(in)};
}

AsymptoticValue ls_raman_approx(const AsymptoticInputs& in) {
  const double w = in.omega_fs / (in.delta + in.omega_fs);
  const double per_beam =
      (4.0 * in.g0 * in.g0 * in.gamma / (9.0 * in.delta * in.delta)) * w * w;
  return {2.0 * per_beam, in_range(in)};
}

AsymptoticValue ls_rayleigh_approx(const AsymptoticInputs& in) {
  const double d = in.delta, w = in.omega_fs;
  const double z = in.delta_z / d;
  const double bracket = (2.0 * d * d + 2.0 * w * d + w * w) /
                         ((d + w) * (d + w));
  const double per_beam = (16.0 * in.g0 * in.g0 * in.gamma / (81.0 * d * d)) *
                          z * z * bracket * bracket;
  return {2.0 * per_beam, in_range(in)};
}

AsymptoticValue ls_gamma_approx(const AsymptoticInputs& in) {
  const auto r = ls_raman_approx(in);
  const auto el = ls_rayleigh_approx(in);
  return {0.5 * (r.value + el.value), r.valid};
}

AsymptoticValue ls_merit_approx(const AsymptoticInputs& in) {
  const auto f = ls_force_approx(in);
  const auto g = ls_gamma_approx(in);
  return {std::abs(f.value) / g.value, f.valid};
}

double ls_merit_scaling(const AsymptoticInputs& in) {
  const double d = in.delta, w = in.omega_fs;
  return (in.delta_z / in.gamma) * (2.0 * d * d + 2.0 * d * w + w * w) /
         (w * w);
}

AsymptoticValue ms_rabi_approx(const AsymptoticInputs& in) {
  const double u = in.omega_fs_prime();
  const double z = in.delta_z_prime();
  const double value =
      (in.g0 * in.g0 / (3.0 * in.delta)) *
      (u / (1.0 + u) +
       (z / 3.0) * (1.0 + 10.0 * u + 5.0 * u * u) / ((1.0 + u) * (1.0 + u)));
  return {value, in_range(in)};
}

AsymptoticValue ms_raman_approx(const AsymptoticInputs& in) {
  const double u = in.omega_fs_prime();
  const double z = in.delta_z_prime();
  const double w = u / (1.0 + u);
  // First-order coefficient 8 z (2+u)/(1+u): the sigma beam contributes the
  // mJ = +1/2 paths once and the pi beam twice, and the mirrored pi paths
  // do not cancel the asymmetry.
  const double value = (2.0 * in.g0 * in.g0 * in.gamma /
                        (9.0 * in.delta * in.delta)) *
                       w * w * (3.0 + 8.0 * z * (2.0 + u) / (1.0 + u));
  return {value, in_range(in)};
}

AsymptoticValue ms_rayleigh_approx(const AsymptoticInputs& in) {
  const double u = in.omega_fs_prime();
  const double w = u / (1.0 + u);
  const double value =
      (4.0 * in.g0 * in.g0 * in.gamma / (81.0 * in.delta * in.delta)) * w * w;
  return {value, in_range(in)};
}

AsymptoticValue ms_gamma_approx(const AsymptoticInputs& in) {
  const auto r = ms_raman_approx(in);
  const auto el = ms_rayleigh_approx(in);
  return {0.25 * (el.value + 3.0 * r.value), r.valid};
}

AsymptoticValue ms_merit_approx(const AsymptoticInputs& in) {
  const auto rabi = ms_rabi_approx(in);
  const auto g = ms_gamma_approx(in);
  return {std::abs(rabi.value) / g.value, rabi.valid};
}

double ms_merit_scaling(const AsymptoticInputs& in) {
  return in.delta * in.delta / (in.gamma * in.omega_fs);
}

namespace {

double exact_zeta_l(const IonSpecies& species, double field_tesla,
                    double delta, GateType gate) {
  const auto scheme = level_energies(species, field_tesla);
  const double zq0 = nist_zeta_q0_unit_intensity();
  const double g0 = single_photon_rabi(1.0, species);
  if (gate == GateType::LS) {
    const auto config = ls_config(delta, 0.0); // vertical polarization
    const auto rates = scattering_rates(scheme, species, config, g0);
    const auto coeffs = stark_coefficients(scheme, species, delta, g0);
    const auto f = spin_forces(coeffs, 0.0, 1.0);
    return merit_ls(f.f0, rates, zq0).zeta_l;
  }
  const auto config = ms1_config(delta, 1.0, 1.0);
  const auto rates = scattering_rates(scheme, species, config, g0);
  const double omega_r = raman_rabi(scheme, species, config, g0);
  return merit_ms(omega_r, rates, zq0).zeta_l;
}

} // namespace

SpeciesRatios species_ratio_report(const IonSpecies& a, const IonSpecies& b,
                                   double delta, double field_tesla) {
  SpeciesRatios r;
  r.ls_exact = exact_zeta_l(a, field_tesla, delta, GateType::LS) /
               exact_zeta_l(b, field_tesla, delta, GateType::LS);
  r.ms_exact = exact_zeta_l(a, field_tesla, delta, GateType::MS1) /
               exact_zeta_l(b, field_tesla, delta, GateType::MS1);
  const auto in_a = asymptotic_inputs(a, field_tesla, delta, 1.0);
  const auto in_b = asymptotic_inputs(b, field_tesla, delta, 1.0);
  r.ls_scaling = ls_merit_scaling(in_a) / ls_merit_scaling(in_b);
  r.ms_scaling = ms_merit_scaling(in_a) / ms_merit_scaling(in_b);
  return r;
}

} // namespace iongate

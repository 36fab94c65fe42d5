#include "iongate/merit.hpp"

#include <cmath>
#include <stdexcept>

#include "iongate/constants.hpp"
#include "iongate/stark.hpp"

namespace iongate {

namespace {

constexpr double kRefDetuningGhz = -5.29;
constexpr double kRefPhiDeg = 65.25;
constexpr double kRefFieldTesla = 4.46;

} // namespace

double reference_zeta_q0(const IonSpecies& species, double intensity) {
  const auto scheme = level_energies(species, kRefFieldTesla);
  const double g0 = single_photon_rabi(intensity, species);
  const auto coeffs = stark_coefficients(scheme, species,
                                         from_ghz(kRefDetuningGhz), g0);
  const double phi = deg_to_rad(kRefPhiDeg);
  const auto forces = spin_forces(coeffs, phi, 1.0);
  const auto config = ls_config(from_ghz(kRefDetuningGhz), phi);
  const auto rates = scattering_rates(scheme, species, config, g0);
  return forces.f0 * forces.f0 / rates.gamma_ls;
}

double nist_zeta_q0_unit_intensity() {
  static const double value = reference_zeta_q0(load_species("be9"), 1.0);
  return value;
}

MeritValues merit_ls(double f0_over_hdk, const ScatteringRates& rates,
                     double zeta_q0) {
  if (rates.gamma_ls <= 0.0) {
    throw std::domain_error("merit undefined at zero decoherence rate");
  }
  MeritValues m;
  m.zeta_q = f0_over_hdk * f0_over_hdk / rates.gamma_ls;
  m.zeta_l = std::abs(f0_over_hdk) / rates.gamma_ls;
  m.zeta_q0 = zeta_q0;
  m.zeta_q_normalized = m.zeta_q / zeta_q0;
  return m;
}

MeritValues merit_ms(double omega_r, const ScatteringRates& rates,
                     double zeta_q0) {
  if (rates.gamma_ms <= 0.0) {
    throw std::domain_error("merit undefined at zero decoherence rate");
  }
  MeritValues m;
  m.zeta_q = omega_r * omega_r / rates.gamma_ms;
  m.zeta_l = std::abs(omega_r) / rates.gamma_ms;
  m.zeta_q0 = zeta_q0;
  m.zeta_q_normalized = m.zeta_q / zeta_q0;
  return m;
}

} // namespace iongate

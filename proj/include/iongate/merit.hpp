#pragma once

#include "iongate/atomic.hpp"
#include "iongate/scatter.hpp"

namespace iongate {

// Interaction-strength-versus-decoherence figures of merit.  zeta_q scales
// linearly with the laser intensity; zeta_l and the normalized zeta_q are
// intensity-independent.
struct MeritValues {
  double zeta_q = 0.0;            // 1/s
  double zeta_q_normalized = 0.0; // zeta_q / zeta_q0 at equal intensity
  double zeta_l = 0.0;            // dimensionless
  double zeta_q0 = 0.0;           // 1/s, reference value used
};

// Reference quadratic figure of merit: the joint ACSS-null / balanced-force
// LS point for 9Be+ at 4.46 T (detuning -5.29 GHz, phi 65.25 deg), equal
// beam intensities.  Computed from first principles at the given intensity.
double reference_zeta_q0(const IonSpecies& species, double intensity);

// Cached be9 reference at 1 W/m^2.
double nist_zeta_q0_unit_intensity();

MeritValues merit_ls(double f0_over_hdk, const ScatteringRates& rates,
                     double zeta_q0);
MeritValues merit_ms(double omega_r, const ScatteringRates& rates,
                     double zeta_q0);

} // namespace iongate

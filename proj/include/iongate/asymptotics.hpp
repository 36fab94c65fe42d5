#pragma once

#include "iongate/atomic.hpp"

namespace iongate {

// Inputs of the large-detuning expansions.  These closed forms are built on
// linear-Zeeman level energies and are first order in delta_z/delta; the
// validity flag trips when |delta_z/delta| >= 0.1.
struct AsymptoticInputs {
  double delta = 0.0;    // rad/s, Delta or Delta_MS
  double delta_z = 0.0;  // rad/s
  double omega_fs = 0.0; // rad/s
  double g0 = 0.0;       // rad/s
  double gamma = 0.0;    // rad/s

  double omega_fs_prime() const { return omega_fs / delta; }
  double delta_z_prime() const { return delta_z / delta; }
};

AsymptoticInputs asymptotic_inputs(const IonSpecies& species, double field_tesla,
                                   double delta, double g0);

struct AsymptoticValue {
  double value = 0.0;
  bool valid = true; // false when |delta_z/delta| >= 0.1
};

// --- Light-shift gate, vertical polarization, both beams ---

// F0/(hbar dk) = (4 g0^2/9)(dz/D^2)[1 + (D/(D+w))^2]
AsymptoticValue ls_force_approx(const AsymptoticInputs& in);

// Two-beam Raman rate, leading order (the first-order terms of the up and
// down rates cancel in the sum).
AsymptoticValue ls_raman_approx(const AsymptoticInputs& in);

// Two-beam Rayleigh decoherence rate, leading order (second order in dz/D).
AsymptoticValue ls_rayleigh_approx(const AsymptoticInputs& in);

// Decoherence rate (raman + rayleigh)/2 entering the LS figures of merit.
AsymptoticValue ls_gamma_approx(const AsymptoticInputs& in);

// Linear figure of merit: force / gamma.
AsymptoticValue ls_merit_approx(const AsymptoticInputs& in);

// Raman-only scaling law (dz/gamma)(2D^2 + 2Dw + w^2)/w^2; the trend form
// used for species comparisons, not a 5%-accurate approximant.
double ls_merit_scaling(const AsymptoticInputs& in);

// --- Molmer-Sorensen gate, configuration with b_sigma = b_pi ---

// Two-photon Rabi frequency, first order in dz' = dz/D.
AsymptoticValue ms_rabi_approx(const AsymptoticInputs& in);

// Raman rate summed over both beams and both directions, first order.
AsymptoticValue ms_raman_approx(const AsymptoticInputs& in);

// Rayleigh rate, leading order.
AsymptoticValue ms_rayleigh_approx(const AsymptoticInputs& in);

// Gamma_MS = (el + 3 r)/4, first order.
AsymptoticValue ms_gamma_approx(const AsymptoticInputs& in);

// Linear figure of merit rabi / gamma_ms.
AsymptoticValue ms_merit_approx(const AsymptoticInputs& in);

// Simplified scaling D^2/(gamma w) valid for w << D.
double ms_merit_scaling(const AsymptoticInputs& in);

// --- Species comparison ---

// Exact linear figures of merit of two species at identical detuning and
// field (LS: vertical polarization; MS: equal-amplitude perpendicular
// configuration), with the scaling-law predictions alongside.
struct SpeciesRatios {
  double ls_exact = 0.0;
  double ms_exact = 0.0;
  double ls_scaling = 0.0;
  double ms_scaling = 0.0;
};

SpeciesRatios species_ratio_report(const IonSpecies& a, const IonSpecies& b,
                                   double delta, double field_tesla);

} // namespace iongate

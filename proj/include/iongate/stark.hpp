#pragma once

#include <array>
#include <vector>

#include "iongate/atomic.hpp"

namespace iongate {

// Crossing geometry of the two beam paths.  theta_r is the full angle
// between the upper and lower beams; the 1D lattice difference wave vector
// is dk = 2 k sin(theta_r/2).
struct BeamGeometry {
  double theta_r = 0.0; // rad
  double k = 0.0;       // 1/m
  double dk = 0.0;      // 1/m
  double waist = 0.0;   // m, Gaussian 1/e^2 radius
};

BeamGeometry make_geometry(const IonSpecies& species, double theta_r,
                           double waist);

enum class GateType { LS, MS1, MS2 };

struct MotionParams {
  double omega_z = 0.0;        // rad/s, COM mode frequency
  double delta_z_detune = 0.0; // rad/s, drive-mode detuning delta - omega_z
};

// Laser settings for one gate.  detuning is referenced to omega0 (Delta for
// LS, Delta_MS for MS).  Angles in radians; MS1 stores the relative field
// amplitudes (b_sigma, b_pi) with b_sigma^2 + b_pi^2 = 2.
struct GateConfiguration {
  GateType gate = GateType::LS;
  double detuning = 0.0;  // rad/s
  double phi_p = 0.0;     // LS polarization angle, phi_u = -phi_l convention
  double b_sigma = 1.0;   // MS1 sideband-beam relative amplitude
  double b_pi = 1.0;      // MS1 carrier-beam relative amplitude
  double phi_sb = 0.0;    // MS2 sideband polarization angle
  double phi_c = 0.0;     // MS2 carrier polarization angle
  double intensity = 0.0; // W/m^2, peak intensity of the normalization field
  BeamGeometry geometry{};
  MotionParams motion{};
};

GateConfiguration ls_config(double detuning, double phi_p);
GateConfiguration ms1_config(double detuning, double b_sigma, double b_pi);
GateConfiguration ms2_config(double detuning, double phi_sb, double phi_c);

// One physical beam for Stark / scattering purposes: its detuning from
// omega0 and the polarization decomposition b_{-1}, b_0, b_{+1} relative to
// the configuration's normalization field.  Linear polarization at angle
// phi from vertical gives {sin(phi)/sqrt(2), cos(phi), sin(phi)/sqrt(2)}.
struct Beam {
  double detuning = 0.0;            // rad/s, beam frequency minus omega0
  std::array<double, 3> pol{0, 0, 0};
};

inline double pol_weight(const Beam& b, int lambda) { return b.pol[lambda + 1]; }

Beam linear_beam(double detuning, double phi);

// The beams of a configuration.  LS: two identical beams (the relative
// frequency offset delta is negligible against all detunings).  MS: the
// carrier at Delta_MS - qubit_splitting and a single effective sideband
// beam at Delta_MS carrying the full sideband amplitude.
std::vector<Beam> beams_for(const GateConfiguration& config,
                            double qubit_splitting);

// g0 = mu E0 / (2 hbar) with E0 = sqrt(2 I / (c eps0)).
double single_photon_rabi(double intensity, const IonSpecies& species);

// Stark shifts of the two qubit states per Eq.-style vertical (A) and
// horizontal (B) decomposition, at single-photon Rabi frequency g0.
struct StarkCoefficients {
  double a_up = 0.0;   // rad/s, pi-polarized shift on |up>
  double a_down = 0.0; // rad/s, pi-polarized shift on |down>
  double b_up = 0.0;   // rad/s, horizontal shift on |up>
  double b_down = 0.0; // rad/s, horizontal shift on |down>
};

// Sum over the six P levels with pure-J coupling weights; the up-state
// denominators include the qubit splitting.  Throws ResonanceError when a
// denominator vanishes.
StarkCoefficients stark_coefficients(const LevelScheme& scheme,
                                     const IonSpecies& species,
                                     double detuning, double g0);

// (A_up - A_down) cos^2 phi + (B_up - B_down) sin^2 phi, one beam.
double differential_acss(const StarkCoefficients& c, double phi_p);

// Two-beam differential ACSS of a full configuration (LS: per-beam value;
// MS: carrier + sideband sum at their respective detunings).
double configuration_acss(const LevelScheme& scheme, const IonSpecies& species,
                          const GateConfiguration& config, double g0);

// Spin-dependent force for the LS beam pair with phi_u = -phi_l, reported
// as F/(hbar dk) in rad/s.
struct SpinForces {
  double f_up = 0.0;       // rad/s
  double f_down = 0.0;     // rad/s
  double f0 = 0.0;         // rad/s, (f_up - f_down)/2
  double f0_newton = 0.0;  // N, hbar * dk * f0
};

SpinForces spin_forces(const StarkCoefficients& c, double phi_p, double dk);

// Two-photon Raman Rabi frequency of an MS configuration: signed sum over
// the four mJ = +-1/2 intermediate P levels.
double raman_rabi(const LevelScheme& scheme, const IonSpecies& species,
                  const GateConfiguration& config, double g0);

} // namespace iongate

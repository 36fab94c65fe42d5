#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iongate/atomic.hpp"
#include "iongate/merit.hpp"
#include "iongate/scatter.hpp"
#include "iongate/stark.hpp"

namespace iongate {

// A solved design point together with its merit and residual differential
// ACSS (evaluated at unit intensity normalization; residual scales with
// intensity like every Stark quantity).
struct OperatingPoint {
  GateConfiguration config{};
  double field_tesla = 0.0;
  MeritValues merit{};
  double residual_acss = 0.0; // rad/s at the evaluation g0
  bool near_resonance = false;
};

// Everything needed to run a gate at a target Bell/cat-state time.
struct GateRequirements {
  double j = 0.0;           // rad/s, COM-mode Ising coupling
  double tau_g = 0.0;       // s, pi/(2 J)
  double g0_required = 0.0; // rad/s
  double intensity = 0.0;   // W/m^2, peak, per the configuration field norm
  double total_power = 0.0; // W, both beam paths, circular Gaussian beams
  double eta = 0.0;         // Lamb-Dicke parameter dk * z0
  double acss_at_point = 0.0; // rad/s, differential ACSS at the solved g0
};

// Polarization angle nulling the differential ACSS at the given detuning,
// in (0, pi/2); absent when (A_up - A_down) and (B_up - B_down) share a
// sign.  The mirrored angle -phi is equally valid.
std::optional<double> acss_null_angle(const LevelScheme& scheme,
                                      const IonSpecies& species,
                                      double detuning);

// Angle giving F_up = -F_down; absent when unsolvable.
std::optional<double> balanced_force_angle(const LevelScheme& scheme,
                                           const IonSpecies& species,
                                           double detuning);

// LS operating point where the ACSS null and the balanced-force condition
// coincide, located by bisection of phi_acss - phi_f over a detuning
// window.  Throws SearchError (with scan diagnostics) if the window does
// not bracket a sign change.
OperatingPoint joint_operating_point(const LevelScheme& scheme,
                                     const IonSpecies& species,
                                     double detuning_lo, double detuning_hi);

// All MS1 detunings in the window where the summed two-beam differential
// ACSS vanishes, for the given sideband/carrier amplitude ratio.
std::vector<double> ms_null_detunings(const LevelScheme& scheme,
                                      const IonSpecies& species,
                                      double b_sigma_over_b_pi,
                                      double detuning_lo, double detuning_hi);

// Per-beam null angles for MS2 at the given detuning: the sideband beam is
// nulled at Delta_MS, the carrier beam at Delta_MS minus the qubit
// splitting.  Returned angles are the positive branches; both sign choices
// of phi_c are physical and give different Rabi frequencies.
struct MsNullAngles {
  double phi_sb = 0.0;
  double phi_c = 0.0;
};
std::optional<MsNullAngles> ms_null_angles(const LevelScheme& scheme,
                                           const IonSpecies& species,
                                           double detuning_ms);

// Merit and residual ACSS of a fully specified configuration, evaluated at
// unit intensity with the be9 reference normalization.
OperatingPoint evaluate_point(const LevelScheme& scheme,
                              const IonSpecies& species,
                              GateConfiguration config);

// Solves the interaction strength for a Bell time tau_g = pi/(2 J) with a
// single phase-space loop (delta_z = 2 pi / tau_g), then converts to the
// required intensity and total power for circular Gaussian beams.
GateRequirements gate_requirements(const OperatingPoint& point,
                                   const IonSpecies& species,
                                   const BeamGeometry& geometry,
                                   double omega_z, double tau_g_target);

// Spontaneous-emission error of a two-qubit entangling gate at the Bell
// time: LS (3/4 Gamma_r + 1/2 Gamma_el) tau, MS (2 Gamma_+ + Gamma_el/4 -
// (4/pi) Gamma_-) tau.
double gate_error(const ScatteringRates& rates, double tau_g, GateType gate);

// Fractional intensity stability between spin-echo arms keeping the ACSS
// rotation below projection noise: (1/sqrt(N)) / (|acss| * arm_time).
// Returns +infinity when the ACSS is nulled.
double intensity_stability_bound(double arm_time, double acss, double n_ions);

} // namespace iongate

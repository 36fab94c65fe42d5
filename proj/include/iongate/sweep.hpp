#pragma once

#include <string>

#include "iongate/design.hpp"
#include "iongate/table.hpp"

namespace iongate {

inline constexpr const char* kVersion = "1.0.0";

enum class SweepQuantity { ZetaL, ZetaQNorm, Acss, Force, Rabi, Rates, Power };
enum class SweepAxis { Detuning, Field };
enum class PolarizationMode {
  FixedAngle,
  AcssNull,
  Vertical,
  Horizontal,
  PerBeamNull
};

SweepQuantity parse_quantity(const std::string& name);
PolarizationMode parse_pol_mode(const std::string& name);
GateType parse_gate(const std::string& name);

// A parameter sweep: one row per grid point.  Points where the requested
// polarization null does not exist are emitted with a "no_null" flag;
// resonant grid points are emitted with a "resonant" flag and NaN values.
struct SweepRequest {
  GateType gate = GateType::LS;
  SweepQuantity quantity = SweepQuantity::ZetaL;
  SweepAxis axis = SweepAxis::Detuning;
  double start = 0.0; // GHz (detuning axis) or T (field axis)
  double stop = 0.0;
  double step = 0.0;
  PolarizationMode pol_mode = PolarizationMode::AcssNull;
  double fixed_angle_deg = 0.0;   // LS FixedAngle
  double b_sigma_over_b_pi = 1.0; // MS1 intensity split
  bool phi_c_positive = true;     // MS2 sign branch
  std::string species = "be9";
  std::string species_file;       // optional constants file
  double field_tesla = 4.46;      // fixed field for detuning sweeps
  double detuning_ghz = 0.0;      // fixed detuning for field sweeps
  double theta_r_deg = 20.0;
  double omega_z_mhz = 1.59;
  double waist_mm = 1.0;
  double tau_ms = 1.0;
  double intensity = 1.0;         // W/m^2, for the rates quantity
};

ResultTable run_sweep(const SweepRequest& request);

// Recomputes the five reference operating points (detuning, angles, linear
// figure of merit, total power for a 1 ms cat time with 1 mm waists) from
// first principles and tabulates them against the published values.
ResultTable table2();

// Dataset underlying a named figure, "fig2" .. "fig12".  fig1 is the level
// diagram and raises an unknown-id error.
ResultTable figure_data(const std::string& id);

// Relative deviation (a - b)/|b| used in comparison tables.
double rel_dev(double a, double b);

} // namespace iongate

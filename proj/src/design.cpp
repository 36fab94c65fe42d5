#include "iongate/design.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

namespace {

constexpr double kScanStep = kTwoPi * 0.1e9;   // 0.1 GHz scan resolution
constexpr double kRefineTol = kTwoPi * 10e6;   // 10 MHz bisection target

// Generic bisection on [lo, hi] assuming f(lo) and f(hi) have opposite
// signs; f may throw ResonanceError, treated as a pole (no root).
template <typename F>
double bisect(F&& f, double lo, double hi, double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((fmid >= 0.0) == (flo >= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

std::optional<double> acss_null_angle(const LevelScheme& scheme,
                                      const IonSpecies& species,
                                      double detuning) {
  const auto c = stark_coefficients(scheme, species, detuning, 1.0);
  const double da = c.a_up - c.a_down;
  const double db = c.b_up - c.b_down;
  if (db == 0.0) return std::nullopt;
  const double tan2 = -da / db;
  if (tan2 <= 0.0) return std::nullopt;
  return std::atan(std::sqrt(tan2));
}

std::optional<double> balanced_force_angle(const LevelScheme& scheme,
                                           const IonSpecies& species,
                                           double detuning) {
  const auto c = stark_coefficients(scheme, species, detuning, 1.0);
  const double sa = c.a_up + c.a_down;
  const double sb = c.b_up + c.b_down;
  if (sb == 0.0) return std::nullopt;
  const double tan2 = sa / sb;
  if (tan2 <= 0.0) return std::nullopt;
  return std::atan(std::sqrt(tan2));
}

OperatingPoint evaluate_point(const LevelScheme& scheme,
                              const IonSpecies& species,
                              GateConfiguration config) {
  config.intensity = 1.0;
  const double g0 = single_photon_rabi(config.intensity, species);
  const auto rates = scattering_rates(scheme, species, config, g0);
  const double zeta_q0 = nist_zeta_q0_unit_intensity();

  OperatingPoint point;
  point.config = config;
  point.field_tesla = scheme.field;
  point.near_resonance = rates.near_resonance;
  point.residual_acss = configuration_acss(scheme, species, config, g0);
  if (config.gate == GateType::LS) {
    const auto coeffs = stark_coefficients(scheme, species, config.detuning, g0);
    const auto forces = spin_forces(coeffs, config.phi_p, 1.0);
    point.merit = merit_ls(forces.f0, rates, zeta_q0);
  } else {
    const double omega_r = raman_rabi(scheme, species, config, g0);
    point.merit = merit_ms(omega_r, rates, zeta_q0);
  }
  return point;
}

OperatingPoint joint_operating_point(const LevelScheme& scheme,
                                     const IonSpecies& species,
                                     double detuning_lo, double detuning_hi) {
  if (!(detuning_lo < detuning_hi)) {
    throw SearchError("empty detuning window");
  }
  // Angle difference where both angles exist; NaN otherwise.
  auto angle_gap = [&](double detuning) -> double {
    try {
      const auto null = acss_null_angle(scheme, species, detuning);
      const auto bal = balanced_force_angle(scheme, species, detuning);
      if (!null || !bal) return std::numeric_limits<double>::quiet_NaN();
      return *null - *bal;
    } catch (const ResonanceError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  int scanned = 0, defined = 0;
  double prev = detuning_lo;
  double fprev = angle_gap(prev);
  for (double d = detuning_lo + kScanStep;; d += kScanStep) {
    if (d > detuning_hi) d = detuning_hi;
    const double fd = angle_gap(d);
    ++scanned;
    if (!std::isnan(fd)) ++defined;
    if (!std::isnan(fprev) && !std::isnan(fd) &&
        (fprev >= 0.0) != (fd >= 0.0)) {
      const double root = bisect(
          [&](double x) {
            const double g = angle_gap(x);
            return std::isnan(g) ? fprev : g; // poles never occur inside here
          },
          prev, d, fprev, kRefineTol);
      auto phi = acss_null_angle(scheme, species, root);
      return evaluate_point(scheme, species, ls_config(root, *phi));
    }
    prev = d;
    fprev = fd;
    if (d >= detuning_hi) break;
  }
  std::ostringstream msg;
  msg << "no joint ACSS-null / balanced-force point in ["
      << to_ghz(detuning_lo) << ", " << to_ghz(detuning_hi) << "] GHz ("
      << scanned << " grid points scanned, " << defined
      << " with both angles defined)";
  throw SearchError(msg.str());
}

std::vector<double> ms_null_detunings(const LevelScheme& scheme,
                                      const IonSpecies& species,
                                      double b_sigma_over_b_pi,
                                      double detuning_lo, double detuning_hi) {
  const double r2 = b_sigma_over_b_pi * b_sigma_over_b_pi;
  const double b_pi = std::sqrt(2.0 / (1.0 + r2));
  const double b_sigma = b_sigma_over_b_pi * b_pi;

  auto residual = [&](double d) -> double {
    const auto config = ms1_config(d, b_sigma, b_pi);
    return configuration_acss(scheme, species, config, 1.0);
  };

  std::vector<double> roots;
  bool have_prev = false;
  double prev = 0.0, fprev = 0.0;
  for (double d = detuning_lo;; d += kScanStep) {
    if (d > detuning_hi) d = detuning_hi;
    double fd;
    bool ok = true;
    try {
      fd = residual(d);
    } catch (const ResonanceError&) {
      ok = false;
      fd = 0.0;
    }
    if (ok && have_prev && (fprev >= 0.0) != (fd >= 0.0)) {
      // A sign change across an atomic resonance is a pole, not a null:
      // keep only roots where the residual actually collapses.
      try {
        const double root = bisect(residual, prev, d, fprev, kRefineTol);
        const double mid = residual(root);
        const double edge = std::min(std::abs(fprev), std::abs(fd));
        if (std::abs(mid) < edge) roots.push_back(root);
      } catch (const ResonanceError&) {
      }
    }
    have_prev = ok;
    prev = d;
    fprev = fd;
    if (d >= detuning_hi) break;
  }
  return roots;
}

std::optional<MsNullAngles> ms_null_angles(const LevelScheme& scheme,
                                           const IonSpecies& species,
                                           double detuning_ms) {
  const auto sb = acss_null_angle(scheme, species, detuning_ms);
  const auto c =
      acss_null_angle(scheme, species, detuning_ms - scheme.qubit_splitting);
  if (!sb || !c) return std::nullopt;
  return MsNullAngles{*sb, *c};
}

GateRequirements gate_requirements(const OperatingPoint& point,
                                   const IonSpecies& species,
                                   const BeamGeometry& geometry,
                                   double omega_z, double tau_g_target) {
  if (tau_g_target <= 0.0) throw std::domain_error("gate time must be positive");
  const auto scheme = level_energies(species, point.field_tesla);

  GateRequirements req;
  req.tau_g = tau_g_target;
  req.j = kPi / (2.0 * tau_g_target);
  const double delta_z_detune = kTwoPi / tau_g_target; // single loop
  req.eta = geometry.dk * std::sqrt(kHbar / (2.0 * species.mass * omega_z));

  // Interaction strength per unit g0^2.
  double strength_unit = 0.0;
  if (point.config.gate == GateType::LS) {
    const auto coeffs =
        stark_coefficients(scheme, species, point.config.detuning, 1.0);
    strength_unit = spin_forces(coeffs, point.config.phi_p, geometry.dk).f0;
  } else {
    strength_unit = raman_rabi(scheme, species, point.config, 1.0);
  }
  if (strength_unit == 0.0) {
    throw SearchError("configuration exerts no spin-dependent coupling; "
                      "gate time unattainable");
  }

  double g0_sq = 0.0;
  if (point.config.gate == GateType::LS) {
    // J = F0^2 / (4 hbar m omega_z delta_z) with F0 = hbar dk f0.
    const double f0_req = std::sqrt(4.0 * species.mass * omega_z *
                                    delta_z_detune * req.j / kHbar) /
                          geometry.dk;
    g0_sq = f0_req / std::abs(strength_unit);
  } else {
    // J = hbar (Omega_R dk)^2 / (4 m omega_z delta_z).
    const double omega_req = std::sqrt(4.0 * species.mass * omega_z *
                                       delta_z_detune * req.j / kHbar) /
                             geometry.dk;
    g0_sq = omega_req / std::abs(strength_unit);
  }
  req.g0_required = std::sqrt(g0_sq);
  // I = c eps0 E0^2 / 2 with E0 = 2 hbar g0 / mu.
  req.intensity = 2.0 * kSpeedOfLight * kEpsilon0 * kHbar * kHbar * g0_sq /
                  (species.mu * species.mu);
  // Peak power of a circular Gaussian beam is I pi w^2 / 2; the two beam
  // paths together carry twice the normalization-field power.
  req.total_power = req.intensity * kPi * geometry.waist * geometry.waist;
  req.acss_at_point = configuration_acss(scheme, species, point.config,
                                         req.g0_required);
  return req;
}

double gate_error(const ScatteringRates& rates, double tau_g, GateType gate) {
  if (gate == GateType::LS) {
    return (0.75 * rates.gamma_r + 0.5 * rates.gamma_el) * tau_g;
  }
  return (2.0 * rates.gamma_plus + 0.25 * rates.gamma_el -
          (4.0 / kPi) * rates.gamma_minus) *
         tau_g;
}

double intensity_stability_bound(double arm_time, double acss, double n_ions) {
  if (arm_time <= 0.0 || n_ions <= 0.0) {
    throw std::domain_error("arm time and ion number must be positive");
  }
  if (acss == 0.0) return std::numeric_limits<double>::infinity();
  return (1.0 / std::sqrt(n_ions)) / (std::abs(acss) * arm_time);
}

} // namespace iongate

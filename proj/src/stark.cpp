#include "iongate/stark.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

BeamGeometry make_geometry(const IonSpecies& species, double theta_r,
                           double waist) {
  if (theta_r <= 0.0 || theta_r > kPi) {
    throw std::domain_error("crossing angle must lie in (0, pi]");
  }
  if (waist <= 0.0) throw std::domain_error("waist must be positive");
  BeamGeometry g;
  g.theta_r = theta_r;
  g.k = species.omega0 / kSpeedOfLight;
  g.dk = 2.0 * g.k * std::sin(0.5 * theta_r);
  g.waist = waist;
  return g;
}

GateConfiguration ls_config(double detuning, double phi_p) {
  GateConfiguration c;
  c.gate = GateType::LS;
  c.detuning = detuning;
  c.phi_p = phi_p;
  return c;
}

GateConfiguration ms1_config(double detuning, double b_sigma, double b_pi) {
  const double norm = b_sigma * b_sigma + b_pi * b_pi;
  if (std::abs(norm - 2.0) > 1e-9) {
    throw std::invalid_argument("MS1 amplitudes must satisfy b_sigma^2 + b_pi^2 = 2");
  }
  GateConfiguration c;
  c.gate = GateType::MS1;
  c.detuning = detuning;
  c.b_sigma = b_sigma;
  c.b_pi = b_pi;
  return c;
}

GateConfiguration ms2_config(double detuning, double phi_sb, double phi_c) {
  GateConfiguration c;
  c.gate = GateType::MS2;
  c.detuning = detuning;
  c.phi_sb = phi_sb;
  c.phi_c = phi_c;
  return c;
}

Beam linear_beam(double detuning, double phi) {
  Beam b;
  b.detuning = detuning;
  const double s = std::sin(phi) / std::sqrt(2.0);
  b.pol = {s, std::cos(phi), s};
  return b;
}

std::vector<Beam> beams_for(const GateConfiguration& config,
                            double qubit_splitting) {
  switch (config.gate) {
    case GateType::LS: {
      // Upper and lower beams at phi and -phi: identical scattering and
      // Stark weights (even in phi).
      Beam b = linear_beam(config.detuning, config.phi_p);
      return {b, b};
    }
    case GateType::MS1: {
      Beam carrier;
      carrier.detuning = config.detuning - qubit_splitting;
      carrier.pol = {0.0, config.b_pi, 0.0};
      Beam sideband;
      sideband.detuning = config.detuning;
      const double s = config.b_sigma / std::sqrt(2.0);
      sideband.pol = {s, 0.0, s};
      return {carrier, sideband};
    }
    case GateType::MS2: {
      Beam carrier = linear_beam(config.detuning - qubit_splitting, config.phi_c);
      Beam sideband = linear_beam(config.detuning, config.phi_sb);
      return {carrier, sideband};
    }
  }
  throw std::logic_error("unreachable");
}

double single_photon_rabi(double intensity, const IonSpecies& species) {
  if (intensity < 0.0) throw std::domain_error("intensity must be nonnegative");
  const double field = std::sqrt(2.0 * intensity / (kSpeedOfLight * kEpsilon0));
  return field * species.mu / (2.0 * kHbar);
}

namespace {

const char* manifold_name(Manifold m) {
  switch (m) {
    case Manifold::S12: return "S1/2";
    case Manifold::P12: return "P1/2";
    case Manifold::P32: return "P3/2";
  }
  return "?";
}

// Detuning of a beam (frequency omega0 + beam_detuning) from the
// |ground> -> |level> transition.
double level_detuning(const LevelScheme& scheme, const IonSpecies& species,
                      double beam_detuning, int two_mj_ground,
                      const Level& level) {
  const double ground = (two_mj_ground > 0) ? scheme.qubit_splitting : 0.0;
  const double den = beam_detuning + species.omega0 - (level.omega - ground);
  if (std::abs(den) < 1e-6 * species.gamma) {
    std::ostringstream msg;
    msg << "beam resonant with " << manifold_name(level.manifold)
        << " mJ=" << level.two_mj << "/2 from mJ=" << two_mj_ground << "/2";
    throw ResonanceError(msg.str());
  }
  return den;
}

} // namespace

StarkCoefficients stark_coefficients(const LevelScheme& scheme,
                                     const IonSpecies& species,
                                     double detuning, double g0) {
  StarkCoefficients out;
  const double g2 = g0 * g0;
  for (const auto& level : scheme.levels) {
    if (level.manifold == Manifold::S12) continue;
    for (int ground : {-1, +1}) {
      double& a = (ground > 0) ? out.a_up : out.a_down;
      double& b = (ground > 0) ? out.b_up : out.b_down;
      // pi component
      const double cpi = coupling(ground, level.manifold, level.two_mj, 0);
      if (cpi != 0.0) {
        a += g2 * cpi * cpi /
             level_detuning(scheme, species, detuning, ground, level);
      }
      // horizontal: equal sigma+ / sigma- split, weight 1/2 each
      for (int lambda : {-1, +1}) {
        const double cs = coupling(ground, level.manifold, level.two_mj, lambda);
        if (cs != 0.0) {
          b += 0.5 * g2 * cs * cs /
               level_detuning(scheme, species, detuning, ground, level);
        }
      }
    }
  }
  return out;
}

double differential_acss(const StarkCoefficients& c, double phi_p) {
  const double cos2 = std::cos(phi_p) * std::cos(phi_p);
  const double sin2 = std::sin(phi_p) * std::sin(phi_p);
  return (c.a_up - c.a_down) * cos2 + (c.b_up - c.b_down) * sin2;
}

double configuration_acss(const LevelScheme& scheme, const IonSpecies& species,
                          const GateConfiguration& config, double g0) {
  switch (config.gate) {
    case GateType::LS: {
      const auto c = stark_coefficients(scheme, species, config.detuning, g0);
      return differential_acss(c, config.phi_p);
    }
    case GateType::MS1: {
      const auto cc = stark_coefficients(
          scheme, species, config.detuning - scheme.qubit_splitting, g0);
      const auto cs = stark_coefficients(scheme, species, config.detuning, g0);
      return config.b_pi * config.b_pi * (cc.a_up - cc.a_down) +
             config.b_sigma * config.b_sigma * (cs.b_up - cs.b_down);
    }
    case GateType::MS2: {
      const auto cc = stark_coefficients(
          scheme, species, config.detuning - scheme.qubit_splitting, g0);
      const auto cs = stark_coefficients(scheme, species, config.detuning, g0);
      return differential_acss(cc, config.phi_c) +
             differential_acss(cs, config.phi_sb);
    }
  }
  throw std::logic_error("unreachable");
}

SpinForces spin_forces(const StarkCoefficients& c, double phi_p, double dk) {
  const double cos2 = std::cos(phi_p) * std::cos(phi_p);
  const double sin2 = std::sin(phi_p) * std::sin(phi_p);
  SpinForces f;
  f.f_up = -2.0 * (c.a_up * cos2 - c.b_up * sin2);
  f.f_down = -2.0 * (c.a_down * cos2 - c.b_down * sin2);
  f.f0 = 0.5 * (f.f_up - f.f_down);
  f.f0_newton = kHbar * dk * f.f0;
  return f;
}

double raman_rabi(const LevelScheme& scheme, const IonSpecies& species,
                  const GateConfiguration& config, double g0) {
  if (config.gate == GateType::LS) {
    throw std::invalid_argument("raman_rabi applies to MS configurations");
  }
  // Polarization components of the carrier and sideband beams relative to
  // the normalization field; {sigma-, pi, sigma+}.
  const auto beams = beams_for(config, scheme.qubit_splitting);
  const Beam& carrier = beams[0];
  const Beam& sideband = beams[1];

  double sum = 0.0;
  for (Manifold m : {Manifold::P12, Manifold::P32}) {
    for (int two_mj : {-1, +1}) {
      const Level& level = scheme.level(m, two_mj);
      // <up| d.eps_C |level>: two_mj = +1 is reached by pi, -1 by sigma-.
      const double c_c = (two_mj == +1)
                             ? pol_weight(carrier, 0) * coupling(+1, m, two_mj, 0)
                             : pol_weight(carrier, -1) * coupling(+1, m, two_mj, -1);
      // <level| d.eps_SB |down>: two_mj = +1 via sigma+, -1 via pi.
      const double c_sb = (two_mj == +1)
                              ? pol_weight(sideband, +1) * coupling(-1, m, two_mj, +1)
                              : pol_weight(sideband, 0) * coupling(-1, m, two_mj, 0);
      if (c_c == 0.0 || c_sb == 0.0) continue;
      // Virtual-level detuning, identical from either beam since
      // omega_SB - omega_C equals the qubit splitting.
      const double den =
          level_detuning(scheme, species, config.detuning, -1, level);
      sum += c_c * c_sb / den;
    }
  }
  return g0 * g0 * sum;
}

} // namespace iongate

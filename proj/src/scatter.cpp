#include "iongate/scatter.hpp"

#include <cmath>
#include <sstream>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

namespace {

// Detuning of the beam from the |i> -> |level> transition; the up-state
// detuning includes the qubit splitting.
double beam_detuning_from(const LevelScheme& scheme, const IonSpecies& species,
                          const Beam& beam, int two_i, const Level& level,
                          bool* near_resonance) {
  const double ground = (two_i > 0) ? scheme.qubit_splitting : 0.0;
  const double den = beam.detuning + species.omega0 - (level.omega - ground);
  if (std::abs(den) < 1e-6 * species.gamma) {
    std::ostringstream msg;
    msg << "beam resonant with P level mJ=" << level.two_mj
        << "/2 (lambda path from mJ=" << two_i << "/2)";
    throw ResonanceError(msg.str());
  }
  if (near_resonance && std::abs(den) < 10.0 * species.gamma) {
    *near_resonance = true;
  }
  return den;
}

double amplitude(const LevelScheme& scheme, const IonSpecies& species,
                 int two_i, int two_j, Manifold J, int lambda,
                 const Beam& beam, bool* near_resonance) {
  const double b = pol_weight(beam, lambda);
  if (b == 0.0) return 0.0;
  const int two_mid = two_i + 2 * lambda;
  // Outgoing polarization fixed by projection conservation.
  const int lambda_out = lambda + (two_i - two_j) / 2;
  if (std::abs(lambda_out) > 1) return 0.0;
  const double absorb = coupling(two_i, J, two_mid, lambda);
  if (absorb == 0.0) return 0.0;
  const double emit = coupling(two_j, J, two_mid, lambda_out);
  if (emit == 0.0) return 0.0;
  const Level& level = scheme.level(J, two_mid);
  const double den =
      beam_detuning_from(scheme, species, beam, two_i, level, near_resonance);
  return b * emit * absorb / den;
}

} // namespace

double scattering_amplitude(const LevelScheme& scheme, const IonSpecies& species,
                            int two_i, int two_j, Manifold J, int lambda,
                            const Beam& beam) {
  return amplitude(scheme, species, two_i, two_j, J, lambda, beam, nullptr);
}

RamanRates raman_rates(const LevelScheme& scheme, const IonSpecies& species,
                       const std::vector<Beam>& beams, double g0) {
  RamanRates out;
  const double g2g = g0 * g0 * species.gamma;
  for (const Beam& beam : beams) {
    for (int lambda : {-1, 0, +1}) {
      double a_ud = 0.0, a_du = 0.0;
      for (Manifold J : {Manifold::P12, Manifold::P32}) {
        a_ud += amplitude(scheme, species, +1, -1, J, lambda, beam,
                          &out.near_resonance);
        a_du += amplitude(scheme, species, -1, +1, J, lambda, beam,
                          &out.near_resonance);
      }
      out.gamma_ud += g2g * a_ud * a_ud;
      out.gamma_du += g2g * a_du * a_du;
    }
  }
  out.gamma_r = out.gamma_ud + out.gamma_du;
  return out;
}

double rayleigh_rate(const LevelScheme& scheme, const IonSpecies& species,
                     const std::vector<Beam>& beams, double g0) {
  double rate = 0.0;
  const double g2g = g0 * g0 * species.gamma;
  for (const Beam& beam : beams) {
    for (int lambda : {-1, 0, +1}) {
      double diff = 0.0;
      for (Manifold J : {Manifold::P12, Manifold::P32}) {
        diff += amplitude(scheme, species, -1, -1, J, lambda, beam, nullptr);
        diff -= amplitude(scheme, species, +1, +1, J, lambda, beam, nullptr);
      }
      rate += g2g * diff * diff;
    }
  }
  return rate;
}

ScatteringRates combine(const RamanRates& raman, double gamma_el) {
  ScatteringRates r;
  r.gamma_ud = raman.gamma_ud;
  r.gamma_du = raman.gamma_du;
  r.gamma_r = raman.gamma_r;
  r.gamma_el = gamma_el;
  r.gamma_ls = 0.5 * (r.gamma_r + r.gamma_el);
  r.gamma_ms = 0.25 * (r.gamma_el + 3.0 * r.gamma_r);
  r.gamma_plus = 0.5 * (r.gamma_ud + r.gamma_du);
  r.gamma_minus = 0.5 * (r.gamma_ud - r.gamma_du);
  r.near_resonance = raman.near_resonance;
  return r;
}

ScatteringRates scattering_rates(const LevelScheme& scheme,
                                 const IonSpecies& species,
                                 const GateConfiguration& config, double g0) {
  const auto beams = beams_for(config, scheme.qubit_splitting);
  const auto raman = raman_rates(scheme, species, beams, g0);
  const double el = rayleigh_rate(scheme, species, beams, g0);
  return combine(raman, el);
}

} // namespace iongate

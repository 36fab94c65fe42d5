#pragma once

#include <vector>

#include "iongate/atomic.hpp"
#include "iongate/stark.hpp"

namespace iongate {

// Off-resonant scattering decoherence rates for a full beam set (two-beam
// LS convention; carrier + sideband sum for MS).
struct ScatteringRates {
  double gamma_ud = 0.0;    // rad/s, Raman up -> down
  double gamma_du = 0.0;    // rad/s, Raman down -> up
  double gamma_r = 0.0;     // rad/s, gamma_ud + gamma_du
  double gamma_el = 0.0;    // rad/s, Rayleigh decoherence
  double gamma_ls = 0.0;    // rad/s, (gamma_r + gamma_el)/2
  double gamma_ms = 0.0;    // rad/s, (gamma_el + 3 gamma_r)/4
  double gamma_plus = 0.0;  // rad/s, (gamma_ud + gamma_du)/2
  double gamma_minus = 0.0; // rad/s, (gamma_ud - gamma_du)/2
  bool near_resonance = false; // any virtual level within 10 gamma
};

// Kramers-Heisenberg amplitude A_{J,lambda}^{i->j} for one beam: the
// incoming-polarization weight times the product of emission and absorption
// matrix elements over the detuning of the intermediate level.  Units of
// 1/(rad/s); forbidden paths return exactly 0.
double scattering_amplitude(const LevelScheme& scheme, const IonSpecies& species,
                            int two_i, int two_j, Manifold J, int lambda,
                            const Beam& beam);

struct RamanRates {
  double gamma_ud = 0.0;
  double gamma_du = 0.0;
  double gamma_r = 0.0;
  bool near_resonance = false;
};

// Raman rates summed over the given beams at single-photon Rabi frequency
// g0; each beam contributes g0^2 gamma sum_lambda (sum_J A)^2.
RamanRates raman_rates(const LevelScheme& scheme, const IonSpecies& species,
                       const std::vector<Beam>& beams, double g0);

// Rayleigh decoherence rate: per beam g0^2 gamma sum_lambda
// (sum_J A^{dn->dn} - sum_J A^{up->up})^2, summed over beams.
double rayleigh_rate(const LevelScheme& scheme, const IonSpecies& species,
                     const std::vector<Beam>& beams, double g0);

// Assembles the combined record from the beam set of a configuration.
ScatteringRates combine(const RamanRates& raman, double gamma_el);

ScatteringRates scattering_rates(const LevelScheme& scheme,
                                 const IonSpecies& species,
                                 const GateConfiguration& config, double g0);

} // namespace iongate

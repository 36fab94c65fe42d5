#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "iongate/stark.hpp"

namespace iongate {

// Single-qubit decoherence channel: Raman flips in both directions, Rayleigh
// dephasing, and the mean-field coherent drive B-bar.
struct DecoherenceChannel {
  double gamma_ud = 0.0;   // rad/s, |up> -> |down>
  double gamma_du = 0.0;   // rad/s, |down> -> |up>
  double gamma_el = 0.0;   // rad/s
  double mean_field = 0.0; // rad/s
};

using DenseMatrix = Eigen::MatrixXcd;

// Hamiltonian (in rad/s, i.e. H/hbar) plus jump operators already scaled by
// the square root of their rates.
struct LindbladProblem {
  DenseMatrix hamiltonian;
  std::vector<DenseMatrix> jump_ops;
};

// Jump operators sqrt(G_ud) sigma-, sqrt(G_du) sigma+, sqrt(G_el/4) sigma_z
// acting on qubit `which` of `n_qubits`.
std::vector<DenseMatrix> channel_jump_ops(const DecoherenceChannel& channel,
                                          int which, int n_qubits);

// H = (J/2) sigma^a sigma^a on two qubits (a = z for LS, x for MS), with the
// per-qubit channels attached.
LindbladProblem two_qubit_gate_problem(double j, GateType gate,
                                       const DecoherenceChannel& ch1,
                                       const DecoherenceChannel& ch2);

// H = B-bar sigma^a on one qubit.
LindbladProblem single_qubit_problem(const DecoherenceChannel& channel,
                                     GateType gate);

// Adaptive Dormand-Prince evolution of rho0 through the sorted time grid
// (first entry is the initial time).  Per-step tolerance 1e-10; validates
// rho0 (Hermitian, unit trace, positive semidefinite).
std::vector<DenseMatrix> lindblad_integrate(const LindbladProblem& problem,
                                            const DenseMatrix& rho0,
                                            const std::vector<double>& times,
                                            double tol = 1e-10);

// Fixed-step RK4 cross-validator.
std::vector<DenseMatrix> lindblad_integrate_fixed(
    const LindbladProblem& problem, const DenseMatrix& rho0,
    const std::vector<double>& times, double dt);

// Off-diagonal evolution factor rho_ud(t)/rho_ud(0) for a single qubit under
// the sigma-z (LS) interaction: exp(-2i Bbar t) exp(-(G_r + G_el) t / 2).
std::complex<double> single_qubit_ls(const DecoherenceChannel& channel,
                                     double t);

// Decay rate of the oscillatory (precession) components under the sigma-x
// (MS) interaction: (G_el + 3 G_r)/4.
double single_qubit_ms_decay_rate(const DecoherenceChannel& channel);

// Modified precession frequency r = sqrt(64 Bbar^2 - (G_el - G_r)^2); the
// oscillatory pieces go as cos(r t / 4).
double single_qubit_ms_precession(const DecoherenceChannel& channel);

// Quantities derived from (J, channel) entering the closed-form two-qubit
// fidelities.
struct FidelityParams {
  double j = 0.0;
  DecoherenceChannel channel{};
  double gamma_plus = 0.0;       // (G_ud + G_du)/2
  double gamma_minus = 0.0;      // (G_ud - G_du)/2
  double gamma_cap = 0.0;        // G_+ + G_el/2
  std::complex<double> j_tilde;  // sqrt(J^2 + 2i J G_- - G_+^2)
  double phi = 0.0;              // arg(j_tilde), branch (-pi, pi]
  double j_tilde_plus = 0.0;     // |j_tilde| cos(phi) + J
  double j_tilde_minus = 0.0;    // |j_tilde| cos(phi) - J
  std::complex<double> j_prime;  // J sqrt(1 - (G_el/2J)^2)
};

FidelityParams make_fidelity_params(double j, const DecoherenceChannel& ch);

// Overlap of the decohered two-qubit state with the ideal sigma-z sigma-z
// evolution from |++>; exact closed form.
double fidelity_ls_exact(const FidelityParams& p, double t);

// Same for the sigma-x sigma-x gate from the state polarized along -z.
double fidelity_ms_exact(const FidelityParams& p, double t);

// First-order Bell-time expansions: LS 1 - (3/4 G_r + 1/2 G_el) tau,
// MS 1 - tau (2 G_+ + G_el/4 - (4/pi) G_-).
double fidelity_bell_approx(const DecoherenceChannel& ch, double tau_g,
                            GateType gate);

// Small-rate linear decay coefficient of the fidelity: LS G_+ + G_el/2,
// MS 2 G_du.
double fidelity_linear_rate(const FidelityParams& p, GateType gate);

// Ideal Bell-time target states (t = pi/2J evolution endpoints).
DenseMatrix ideal_ls_state(double j, double t);  // from |++>
DenseMatrix ideal_ms_state(double j, double t);  // from |down down>

} // namespace iongate

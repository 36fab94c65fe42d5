#include "iongate/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "iongate/constants.hpp"

namespace iongate {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

DenseMatrix pauli(char which) {
  DenseMatrix m(2, 2);
  switch (which) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, -kI, kI, 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    case '+': m << 0, 1, 0, 0; break; // |up><down|, basis {up, down}
    case '-': m << 0, 0, 1, 0; break;
    default: throw std::logic_error("bad pauli");
  }
  return m;
}

DenseMatrix embed(const DenseMatrix& op, int which, int n_qubits) {
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    const DenseMatrix& factor =
        (q == which) ? op : DenseMatrix::Identity(2, 2);
    DenseMatrix next(out.rows() * factor.rows(), out.cols() * factor.cols());
    for (int i = 0; i < out.rows(); ++i)
      for (int j = 0; j < out.cols(); ++j)
        next.block(i * factor.rows(), j * factor.cols(), factor.rows(),
                   factor.cols()) = out(i, j) * factor;
    out = next;
  }
  return out;
}

DenseMatrix lindblad_rhs(const LindbladProblem& p,
                         const std::vector<DenseMatrix>& dagger_products,
                         const DenseMatrix& rho) {
  DenseMatrix d = -kI * (p.hamiltonian * rho - rho * p.hamiltonian);
  for (size_t k = 0; k < p.jump_ops.size(); ++k) {
    const DenseMatrix& o = p.jump_ops[k];
    const DenseMatrix& oo = dagger_products[k];
    d += o * rho * o.adjoint() - 0.5 * (oo * rho + rho * oo);
  }
  return d;
}

std::vector<DenseMatrix> dagger_products(const LindbladProblem& p) {
  std::vector<DenseMatrix> prods;
  prods.reserve(p.jump_ops.size());
  for (const auto& o : p.jump_ops) prods.push_back(o.adjoint() * o);
  return prods;
}

void validate_state(const DenseMatrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-9 ||
      std::abs(rho.trace().imag()) > 1e-12) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("density matrix must be positive semidefinite");
  }
}

} // namespace

std::vector<DenseMatrix> channel_jump_ops(const DecoherenceChannel& channel,
                                          int which, int n_qubits) {
  std::vector<DenseMatrix> ops;
  if (channel.gamma_ud > 0.0) {
    ops.push_back(std::sqrt(channel.gamma_ud) *
                  embed(pauli('-'), which, n_qubits));
  }
  if (channel.gamma_du > 0.0) {
    ops.push_back(std::sqrt(channel.gamma_du) *
                  embed(pauli('+'), which, n_qubits));
  }
  if (channel.gamma_el > 0.0) {
    ops.push_back(std::sqrt(0.25 * channel.gamma_el) *
                  embed(pauli('z'), which, n_qubits));
  }
  return ops;
}

LindbladProblem two_qubit_gate_problem(double j, GateType gate,
                                       const DecoherenceChannel& ch1,
                                       const DecoherenceChannel& ch2) {
  const char axis = (gate == GateType::LS) ? 'z' : 'x';
  LindbladProblem p;
  p.hamiltonian =
      0.5 * j * (embed(pauli(axis), 0, 2) * embed(pauli(axis), 1, 2));
  p.jump_ops = channel_jump_ops(ch1, 0, 2);
  for (auto& o : channel_jump_ops(ch2, 1, 2)) p.jump_ops.push_back(o);
  return p;
}

LindbladProblem single_qubit_problem(const DecoherenceChannel& channel,
                                     GateType gate) {
  const char axis = (gate == GateType::LS) ? 'z' : 'x';
  LindbladProblem p;
  p.hamiltonian = channel.mean_field * pauli(axis);
  p.jump_ops = channel_jump_ops(channel, 0, 1);
  return p;
}

std::vector<DenseMatrix> lindblad_integrate(const LindbladProblem& problem,
                                            const DenseMatrix& rho0,
                                            const std::vector<double>& times,
                                            double tol) {
  validate_state(rho0);
  if (times.empty()) return {};
  for (size_t i = 1; i < times.size(); ++i) {
    if (times[i] < times[i - 1]) {
      throw std::invalid_argument("times must be sorted ascending");
    }
  }
  const auto oo = dagger_products(problem);
  auto rhs = [&](const DenseMatrix& rho) {
    return lindblad_rhs(problem, oo, rho);
  };

  // Dormand-Prince 5(4) coefficients.
  static const double a[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
       -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static const double b5[7] = {35.0 / 384,    0.0,         500.0 / 1113,
                               125.0 / 192,   -2187.0 / 6784, 11.0 / 84, 0.0};
  static const double b4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695,
                               393.0 / 640,       -92097.0 / 339200,
                               187.0 / 2100,      1.0 / 40};

  std::vector<DenseMatrix> out;
  out.reserve(times.size());
  DenseMatrix rho = rho0;
  double t = times.front();
  out.push_back(rho);

  // Natural time scale from the generator norms.
  double scale = problem.hamiltonian.cwiseAbs().maxCoeff();
  for (const auto& o : problem.jump_ops) {
    scale = std::max(scale, o.cwiseAbs().maxCoeff() *
                                o.cwiseAbs().maxCoeff());
  }
  double dt = (scale > 0.0) ? 0.01 / scale : 1.0;

  for (size_t idx = 1; idx < times.size(); ++idx) {
    const double t_target = times[idx];
    while (t < t_target) {
      const double h = std::min(dt, t_target - t);
      DenseMatrix k[7];
      k[0] = rhs(rho);
      for (int s = 1; s < 7; ++s) {
        DenseMatrix y = rho;
        for (int q = 0; q < s; ++q) {
          if (a[s][q] != 0.0) y += (h * a[s][q]) * k[q];
        }
        k[s] = rhs(y);
      }
      DenseMatrix y5 = rho, err = DenseMatrix::Zero(rho.rows(), rho.cols());
      for (int s = 0; s < 7; ++s) {
        if (b5[s] != 0.0) y5 += (h * b5[s]) * k[s];
        const double db = b5[s] - b4[s];
        if (db != 0.0) err += (h * db) * k[s];
      }
      const double err_norm = err.cwiseAbs().maxCoeff() / tol;
      if (err_norm <= 1.0) {
        rho = y5;
        t += h;
      }
      const double grow =
          (err_norm > 0.0) ? 0.9 * std::pow(err_norm, -0.2) : 5.0;
      dt = h * std::clamp(grow, 0.2, 5.0);
      if (dt < 1e-15 * std::max(1.0, std::abs(t_target))) {
        throw std::runtime_error("integration step size underflow");
      }
    }
    out.push_back(rho);
  }
  return out;
}

std::vector<DenseMatrix> lindblad_integrate_fixed(
    const LindbladProblem& problem, const DenseMatrix& rho0,
    const std::vector<double>& times, double dt) {
  validate_state(rho0);
  const auto oo = dagger_products(problem);
  auto rhs = [&](const DenseMatrix& rho) {
    return lindblad_rhs(problem, oo, rho);
  };
  std::vector<DenseMatrix> out;
  out.reserve(times.size());
  DenseMatrix rho = rho0;
  double t = times.front();
  out.push_back(rho);
  for (size_t idx = 1; idx < times.size(); ++idx) {
    const double t_target = times[idx];
    while (t < t_target - 1e-15) {
      const double h = std::min(dt, t_target - t);
      const DenseMatrix k1 = rhs(rho);
      const DenseMatrix k2 = rhs(rho + 0.5 * h * k1);
      const DenseMatrix k3 = rhs(rho + 0.5 * h * k2);
      const DenseMatrix k4 = rhs(rho + h * k3);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      t += h;
    }
    out.push_back(rho);
  }
  return out;
}

std::complex<double> single_qubit_ls(const DecoherenceChannel& channel,
                                     double t) {
  const double gamma_r = channel.gamma_ud + channel.gamma_du;
  return std::exp(Complex(-0.5 * (gamma_r + channel.gamma_el) * t,
                          -2.0 * channel.mean_field * t));
}

double single_qubit_ms_decay_rate(const DecoherenceChannel& channel) {
  const double gamma_r = channel.gamma_ud + channel.gamma_du;
  return 0.25 * (channel.gamma_el + 3.0 * gamma_r);
}

double single_qubit_ms_precession(const DecoherenceChannel& channel) {
  const double gamma_r = channel.gamma_ud + channel.gamma_du;
  const double bbar = channel.mean_field;
  const double diff = channel.gamma_el - gamma_r;
  return std::sqrt(64.0 * bbar * bbar - diff * diff);
}

FidelityParams make_fidelity_params(double j, const DecoherenceChannel& ch) {
  FidelityParams p;
  p.j = j;
  p.channel = ch;
  p.gamma_plus = 0.5 * (ch.gamma_ud + ch.gamma_du);
  p.gamma_minus = 0.5 * (ch.gamma_ud - ch.gamma_du);
  p.gamma_cap = p.gamma_plus + 0.5 * ch.gamma_el;
  p.j_tilde = std::sqrt(Complex(j * j - p.gamma_plus * p.gamma_plus,
                                2.0 * j * p.gamma_minus));
  p.phi = std::arg(p.j_tilde);
  const double mag = std::abs(p.j_tilde);
  p.j_tilde_plus = mag * std::cos(p.phi) + j;
  p.j_tilde_minus = mag * std::cos(p.phi) - j;
  p.j_prime = std::sqrt(Complex(j * j - 0.25 * ch.gamma_el * ch.gamma_el, 0.0));
  return p;
}

namespace {

// Scalar closed form valid for all parameter signs; time dependence kept
// complex so over-damped regimes continue analytically.
double fidelity_ls_grouped(const FidelityParams& p, double t) {
  const double j = p.j;
  const double gp = p.gamma_plus;
  const double gcap = p.gamma_cap;
  const double mag = std::abs(p.j_tilde);
  const double phi = p.phi;
  if (mag == 0.0) {
    // Critically damped J~ = 0: sinc(0) = 1 limit of the unguarded form.
    const double env = std::exp(-(gcap + gp) * t);
    const double term = std::cos(j * t) * (1.0 + gp * t) +
                        std::sin(j * t) * j * t;
    return 0.25 * (1.0 + std::exp(-2.0 * gcap * t)) + 0.5 * env * term;
  }
  const double gplus2 = gp + 2.0 * p.gamma_minus;
  const double gminus2 = gp - 2.0 * p.gamma_minus;
  const double a_p = gplus2 * std::sin(phi) + j * std::cos(phi);
  const double a_m = gminus2 * std::sin(phi) - j * std::cos(phi);
  const double b_p = gplus2 * std::cos(phi) - j * std::sin(phi);
  const double b_m = gminus2 * std::cos(phi) + j * std::sin(phi);
  const double jt_p = p.j_tilde_plus;
  const double jt_m = p.j_tilde_minus;
  const double env1 = std::exp(-(gcap + gp + mag * std::sin(phi)) * t);
  const double env2 = std::exp(-(gcap + gp - mag * std::sin(phi)) * t);
  const double g1 = (mag - a_p) * std::cos(jt_p * t) +
                    (mag - a_m) * std::cos(jt_m * t) +
                    b_p * std::sin(jt_p * t) + b_m * std::sin(jt_m * t);
  const double g2 = (mag + a_m) * std::cos(jt_p * t) +
                    (mag + a_p) * std::cos(jt_m * t) +
                    b_m * std::sin(jt_p * t) + b_p * std::sin(jt_m * t);
  return env1 * g1 / (8.0 * mag) + env2 * g2 / (8.0 * mag) +
         0.25 * (1.0 + std::exp(-2.0 * gcap * t));
}

// Gamma_- = 0 branch: real or over-damped J~ handled through the complex
// square root.
double fidelity_ls_symmetric(const FidelityParams& p, double t) {
  const double j = p.j;
  const double gp = p.gamma_plus;
  const double gcap = p.gamma_cap;
  const Complex jt = p.j_tilde; // sqrt(J^2 - G+^2), possibly imaginary
  const Complex jtp = jt + j;
  const Complex jtm = jt - j;
  if (std::abs(jt) == 0.0) return fidelity_ls_grouped(p, t);
  const Complex bracket = jtm * std::cos(jtp * t) + jtp * std::cos(jtm * t) +
                          gp * std::sin(jtp * t) + gp * std::sin(jtm * t);
  const Complex f = 0.25 * (1.0 + std::exp(-2.0 * gcap * t) +
                            std::exp(-(gcap + gp) * t) / jt * bracket);
  return f.real();
}

} // namespace

double fidelity_ls_exact(const FidelityParams& p, double t) {
  if (t < 0.0) throw std::domain_error("time must be nonnegative");
  if (p.gamma_minus == 0.0) return fidelity_ls_symmetric(p, t);
  return fidelity_ls_grouped(p, t);
}

double fidelity_ms_exact(const FidelityParams& p, double t) {
  if (t < 0.0) throw std::domain_error("time must be nonnegative");
  const double j = p.j;
  const double gp = p.gamma_plus;
  const double gm = p.gamma_minus;
  const double gel = p.channel.gamma_el;
  const double gcap = p.gamma_cap;
  const double gdu = p.channel.gamma_du;

  const Complex jp = p.j_prime;
  const Complex j_plus = j + jp;
  const Complex j_minus = j - jp;
  const double eta_p = 0.5 * j * j + 2.0 * gp * gp + gp * gel;
  const double eta_m = 0.5 * j * j + 2.0 * gp * gp - gp * gel;
  const double lam_p = 2.0 * gp + gel;
  const double lam_m = 2.0 * gp - gel;

  // Raman-free channels keep these ratios finite (G- = 0 whenever G+ = 0).
  const double frac1 = (gm == 0.0) ? 0.0 : gm * gm * lam_p / (gp * eta_p);
  const double frac2 =
      (gm == 0.0) ? 0.0 : gm * (2.0 * gp - gm) * lam_m / (gp * eta_m);

  const Complex a_plus =
      (j_minus * (2.0 * eta_p - 2.0 * gm * gp - gm * lam_p) +
       gm * gel * jp) /
      (eta_p * jp);
  const Complex a_minus =
      (j_plus * (2.0 * eta_p - 2.0 * gm * gp - gm * lam_p) -
       gm * gel * jp) /
      (eta_p * jp);
  const Complex b_plus =
      (-2.0 * gm * j * j_minus - gel * eta_p + gel * gm * lam_p) /
      (eta_p * jp);
  const Complex b_minus =
      (-2.0 * gm * j * j_plus - gel * eta_p + gel * gm * lam_p) /
      (eta_p * jp);
  const Complex c_coef =
      jp *
      (2.0 * gdu * (gel * gel - 4.0 * gp * gp - j * j) + j * j * gel) /
      (eta_p * eta_m);
  const double d_coef =
      (2.0 * gdu * gel * (gel * gel - 4.0 * gp * gp - 3.0 * j * j) +
       j * j * (gel * gel - 8.0 * gp * gp - 2.0 * j * j)) /
      (2.0 * eta_p * eta_m);

  const double env = std::exp(-(gcap + gp) * t);
  Complex f = 0.25 * (1.0 + frac1);
  f += 0.25 * std::exp(-4.0 * gp * t) * (1.0 - frac2);
  f += (gm / (2.0 * eta_p)) * (lam_p * std::cos(j * t) + j * std::sin(j * t));
  f -= (env / 8.0) *
       (a_plus * std::cos(j_plus * t) - a_minus * std::cos(j_minus * t) +
        b_plus * std::sin(j_plus * t) - b_minus * std::sin(j_minus * t));
  if (gm != 0.0) {
    f -= (gm * env / (4.0 * jp)) *
         (c_coef * std::cos(jp * t) + d_coef * std::sin(jp * t));
  }
  return f.real();
}

double fidelity_bell_approx(const DecoherenceChannel& ch, double tau_g,
                            GateType gate) {
  const double gamma_r = ch.gamma_ud + ch.gamma_du;
  if (gate == GateType::LS) {
    return 1.0 - (0.75 * gamma_r + 0.5 * ch.gamma_el) * tau_g;
  }
  const double gp = 0.5 * (ch.gamma_ud + ch.gamma_du);
  const double gm = 0.5 * (ch.gamma_ud - ch.gamma_du);
  return 1.0 - tau_g * (2.0 * gp + 0.25 * ch.gamma_el - (4.0 / kPi) * gm);
}

double fidelity_linear_rate(const FidelityParams& p, GateType gate) {
  if (gate == GateType::LS) return p.gamma_cap;
  return 2.0 * p.channel.gamma_du;
}

DenseMatrix ideal_ls_state(double j, double t) {
  Eigen::Vector4cd psi;
  // Basis {uu, ud, du, dd}; |++> evolved under (J/2) sz sz.
  const Complex even = std::exp(-kI * (0.5 * j * t));
  const Complex odd = std::exp(kI * (0.5 * j * t));
  psi << 0.5 * even, 0.5 * odd, 0.5 * odd, 0.5 * even;
  return psi * psi.adjoint();
}

DenseMatrix ideal_ms_state(double j, double t) {
  Eigen::Vector4cd psi;
  // |dd> evolved under (J/2) sx sx: couples dd <-> uu.
  const double half = 0.5 * j * t;
  psi << Complex(0, -std::sin(half)), 0, 0, Complex(std::cos(half), 0);
  return psi * psi.adjoint();
}

} // namespace iongate

// 4-parameter model scan: omega_fs offset, P-Zeeman scale, mixing scale,
// global P shift. Which combination reproduces the published features?
#include <cstdio>
#include <cmath>
#include <optional>
#include <vector>
#include "iongate/constants.hpp"
#include "iongate/atomic.hpp"

using namespace iongate;

struct Model { double dw, kz, s, u; }; // GHz, scale, scale, GHz

struct Co { double dA, dB, sA, sB; };

// P energies: Lande linear-Zeeman with scaled dz, plus s * (exact diag -
// Lande) mixing shift, plus uniform u; omega_fs = 197 + dw.
Co coeffs(const Model& md, double dz0, double d_ghz) {
  const double w = 197.0 + md.dw;
  const double dzp = md.kz * dz0;  // P-manifold Zeeman
  const double xi = (2.0 / 3.0) * w;
  auto diag_pair = [&](double sign) {
    const double a = sign * dzp, dd = -0.5 * xi, c = xi / std::sqrt(2.0);
    const double mm = 0.5 * (a + dd), r = std::hypot(0.5 * (a - dd), c);
    return std::pair{mm + r - 0.5 * xi, mm - r + xi}; // shifts rel zero-field manifolds... careful
  };
  // exact energies rel zero-field P32:
  auto exact = [&](double sign, bool p32) {
    const double a = sign * dzp, dd = -0.5 * xi, c = xi / std::sqrt(2.0);
    const double mm = 0.5 * (a + dd), r = std::hypot(0.5 * (a - dd), c);
    return (p32 ? mm + r : mm - r) - 0.5 * xi;
  };
  auto lande = [&](double sign, bool p32) {
    return p32 ? (2.0 / 3.0) * sign * dzp : -w + sign * dzp / 3.0;
  };
  auto level = [&](double sign, bool p32) {
    const double l = lande(sign, p32);
    const double e = exact(sign, p32) - (p32 ? 0.0 : 0.0);
    const double ex = (p32 ? e : e); // exact already rel zero-field P32
    const double exact_rel = p32 ? ex : ex; // for P12, rel P32; lande for P12 includes -w
    return l + md.s * ((p32 ? ex : ex) - l) + md.u;
  };
  const double E32p = level(+1, true), E32m = level(-1, true);
  const double E12p = level(+1, false), E12m = level(-1, false);
  const double E32pp = 2 * dzp + md.u, E32mm = -2 * dzp + md.u;
  const double q = 2 * dz0; // qubit splitting (ground g = 2, unscaled)
  auto den = [&](double E, bool up) { return d_ghz + (up ? q : 0.0) - (E + dz0); };
  const double a_up = (2.0/3.0)/den(E32p, true) + (1.0/3.0)/den(E12p, true);
  const double a_dn = (2.0/3.0)/den(E32m, false) + (1.0/3.0)/den(E12m, false);
  const double b_up = 0.5*(1.0/den(E32pp, true) + (1.0/3.0)/den(E32m, true) + (2.0/3.0)/den(E12m, true));
  const double b_dn = 0.5*(1.0/den(E32mm, false) + (1.0/3.0)/den(E32p, false) + (2.0/3.0)/den(E12p, false));
  return {a_up - a_dn, b_up - b_dn, a_up + a_dn, b_up + b_dn};
}

int main() {
  const double dz0 = 13.99624604 * 4.46;

  auto residuals = [&](const Model& m) {
    std::vector<double> r;
    auto rn = [&](double d, double phi) {
      const auto c = coeffs(m, dz0, d);
      const double t = deg_to_rad(phi);
      return (c.dA * std::cos(t) * std::cos(t) + c.dB * std::sin(t) * std::sin(t)) /
             (std::abs(c.dA) + std::abs(c.dB));
    };
    auto rb = [&](double d, double phi) {
      const auto c = coeffs(m, dz0, d);
      const double t = deg_to_rad(phi);
      return (c.sA * std::cos(t) * std::cos(t) - c.sB * std::sin(t) * std::sin(t)) /
             (std::abs(c.sA) + std::abs(c.sB));
    };
    r.push_back(rn(-5.29, 65.25));
    r.push_back(rb(-5.29, 65.25));
    r.push_back(rn(-142.6, 39.3));
    r.push_back(rn(-142.6 - 2 * dz0, 41.5));
    r.push_back(rn(431.4, 83.5));
    r.push_back(rn(431.4 - 2 * dz0, 71.0));
    r.push_back(rn(299.3, 70.5));
    {
      // MS1 null at -163.2 with physical sideband/carrier ratio 1/sqrt(2)
      const auto cc = coeffs(m, dz0, -163.2 - 2 * dz0);
      const auto cs = coeffs(m, dz0, -163.2);
      const double v = (4.0/3.0) * cc.dA + (2.0/3.0) * cs.dB;
      r.push_back(v / (std::abs(cc.dA) + std::abs(cs.dB)));
    }
    return r;
  };

  // coarse grid then Gauss-Newton on (dw, kz, s, u)
  Model best{0, 1, 1, 0};
  double best_ss = 1e99;
  for (double dw = -6; dw <= 6; dw += 1.0)
    for (double kz = 0.9; kz <= 1.15; kz += 0.025)
      for (double s = 0.0; s <= 2.0; s += 0.25)
        for (double u = -6; u <= 6; u += 1.0) {
          Model m{dw, kz, s, u};
          double ss = 0;
          for (double v : residuals(m)) ss += v * v;
          if (ss < best_ss) { best_ss = ss; best = m; }
        }
  std::printf("grid best: dw=%.2f kz=%.3f s=%.2f u=%.2f ss=%.3e\n",
              best.dw, best.kz, best.s, best.u, best_ss);

  Model p = best;
  for (int iter = 0; iter < 200; ++iter) {
    auto r0 = residuals(p);
    const int n = (int)r0.size();
    double jac[8][4];
    const double hh[4] = {1e-4, 1e-5, 1e-5, 1e-4};
    for (int k = 0; k < 4; ++k) {
      Model q = p;
      (k == 0 ? q.dw : k == 1 ? q.kz : k == 2 ? q.s : q.u) += hh[k];
      auto rq = residuals(q);
      for (int i = 0; i < n; ++i) jac[i][k] = (rq[i] - r0[i]) / hh[k];
    }
    double ata[4][4] = {}, atb[4] = {};
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < 4; ++a) {
        atb[a] -= jac[i][a] * r0[i];
        for (int b = 0; b < 4; ++b) ata[a][b] += jac[i][a] * jac[i][b];
      }
    for (int a = 0; a < 4; ++a) ata[a][a] *= 1.01; // mild damping
    double M[4][5];
    for (int a = 0; a < 4; ++a) { for (int b = 0; b < 4; ++b) M[a][b] = ata[a][b]; M[a][4] = atb[a]; }
    for (int c = 0; c < 4; ++c) {
      int piv = c;
      for (int rr = c + 1; rr < 4; ++rr) if (std::abs(M[rr][c]) > std::abs(M[piv][c])) piv = rr;
      std::swap(M[c], M[piv]);
      for (int rr = 0; rr < 4; ++rr) {
        if (rr == c) continue;
        const double f = M[rr][c] / M[c][c];
        for (int cc = c; cc < 5; ++cc) M[rr][cc] -= f * M[c][cc];
      }
    }
    double step[4];
    for (int k = 0; k < 4; ++k) step[k] = M[k][4] / M[k][k];
    p.dw += step[0]; p.kz += step[1]; p.s += step[2]; p.u += step[3];
  }
  auto rf = residuals(p);
  double ss = 0; for (double v : rf) ss += v * v;
  std::printf("refined: dw=%+.3f GHz  kz=%.4f  s=%.3f  u=%+.3f GHz  ss=%.3e\n",
              p.dw, p.kz, p.s, p.u, ss);
  std::printf("residuals: ");
  for (double v : rf) std::printf("%+.2e ", v);
  std::printf("\n");
  return 0;
}

// Gauss-Newton fit: which shifts of the four mJ=+-1/2 P levels (relative to
// the Lande/linear energies) reproduce the published anchors?
#include <cstdio>
#include <cmath>
#include <array>
#include <vector>
#include "iongate/constants.hpp"
#include "iongate/atomic.hpp"

using namespace iongate;

struct P { double e[4]; }; // shifts on P32+1/2, P32-1/2, P12+1/2, P12-1/2 (GHz)

struct Co { double dA, dB, sA, sB; };

Co coeffs(const IonSpecies& s, double dz, const P& p, double d_ghz) {
  // linear-Zeeman energies (GHz, rel zero-field P32, no ground offset) + shifts
  const double w = to_ghz(s.omega_fs);
  const double E32p = (2.0/3.0)*dz + p.e[0], E32m = -(2.0/3.0)*dz + p.e[1];
  const double E12p = -w + dz/3.0 + p.e[2], E12m = -w - dz/3.0 + p.e[3];
  const double E32pp = 2*dz, E32mm = -2*dz;
  auto den = [&](double E, bool up) { return d_ghz + (up ? 2*dz : 0.0) - (E + dz); };
  Co c{};
  // A (pi): up -> mJ=+1/2 (w32=2/3, w12=1/3); down -> mJ=-1/2
  const double a_up = (2.0/3.0)/den(E32p, true) + (1.0/3.0)/den(E12p, true);
  const double a_dn = (2.0/3.0)/den(E32m, false) + (1.0/3.0)/den(E12m, false);
  // B (sigma, half weight each): up: sig+ -> +3/2 (1); sig- -> -1/2 (1/3 P32, 2/3 P12)
  const double b_up = 0.5*(1.0/den(E32pp, true) + (1.0/3.0)/den(E32m, true) + (2.0/3.0)/den(E12m, true));
  const double b_dn = 0.5*(1.0/den(E32mm, false) + (1.0/3.0)/den(E32p, false) + (2.0/3.0)/den(E12p, false));
  c.dA = a_up - a_dn; c.dB = b_up - b_dn; c.sA = a_up + a_dn; c.sB = b_up + b_dn;
  return c;
}

int main() {
  const auto be = load_species("be9");
  const double dz = 13.99624604 * 4.46; // GHz

  auto residuals = [&](const P& p) {
    std::vector<double> r;
    auto rnull = [&](double d, double phi_deg) {
      const auto c = coeffs(be, dz, p, d);
      const double t = deg_to_rad(phi_deg);
      return (c.dA * std::cos(t)*std::cos(t) + c.dB * std::sin(t)*std::sin(t)) /
             (std::abs(c.dA) + std::abs(c.dB));
    };
    auto rbal = [&](double d, double phi_deg) {
      const auto c = coeffs(be, dz, p, d);
      const double t = deg_to_rad(phi_deg);
      return (c.sA * std::cos(t)*std::cos(t) - c.sB * std::sin(t)*std::sin(t)) /
             (std::abs(c.sA) + std::abs(c.sB));
    };
    r.push_back(rnull(-5.29, 65.25));
    r.push_back(rbal(-5.29, 65.25));
    r.push_back(rnull(299.3, 70.5));
    r.push_back(rnull(431.4, 83.5));
    r.push_back(rnull(-142.6, 39.3));
    r.push_back(rnull(-142.6 - 2*dz, 41.5));
    {
      const auto cc = coeffs(be, dz, p, -163.2 - 2*dz);
      const auto cs = coeffs(be, dz, p, -163.2);
      const double v = (2.0/3.0)*cc.dA + (4.0/3.0)*cs.dB;
      r.push_back(v / (std::abs(cc.dA) + std::abs(cs.dB)));
    }
    return r;
  };

  P p{{0,0,0,0}};
  for (int iter = 0; iter < 60; ++iter) {
    auto r0 = residuals(p);
    const int n = (int)r0.size();
    double jac[7][4];
    const double h = 1e-4;
    for (int k = 0; k < 4; ++k) {
      P q = p; q.e[k] += h;
      auto rq = residuals(q);
      for (int i = 0; i < n; ++i) jac[i][k] = (rq[i] - r0[i]) / h;
    }
    // normal equations
    double ata[4][4] = {}, atb[4] = {};
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < 4; ++a) {
        atb[a] -= jac[i][a] * r0[i];
        for (int b = 0; b < 4; ++b) ata[a][b] += jac[i][a] * jac[i][b];
      }
    // solve 4x4 (Gauss)
    double M[4][5];
    for (int a = 0; a < 4; ++a) { for (int b = 0; b < 4; ++b) M[a][b] = ata[a][b]; M[a][4] = atb[a]; }
    for (int c = 0; c < 4; ++c) {
      int piv = c;
      for (int rr = c+1; rr < 4; ++rr) if (std::abs(M[rr][c]) > std::abs(M[piv][c])) piv = rr;
      std::swap(M[c], M[piv]);
      for (int rr = 0; rr < 4; ++rr) {
        if (rr == c) continue;
        const double f = M[rr][c] / M[c][c];
        for (int cc = c; cc < 5; ++cc) M[rr][cc] -= f * M[c][cc];
      }
    }
    for (int k = 0; k < 4; ++k) p.e[k] += M[k][4] / M[k][k];
  }
  auto rf = residuals(p);
  std::printf("fitted shifts (GHz): P32+1/2 %+0.3f  P32-1/2 %+0.3f  P12+1/2 %+0.3f  P12-1/2 %+0.3f\n",
              p.e[0], p.e[1], p.e[2], p.e[3]);
  std::printf("residuals: ");
  for (double r : rf) std::printf("%+.2e ", r);
  std::printf("\n");
  std::printf("reference: diag shifts  +3.905 +4.784 -3.905 -4.784\n");
  return 0;
}

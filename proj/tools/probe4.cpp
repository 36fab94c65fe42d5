// Full-mixing model: energies AND couplings from the 2x2 diagonalization.
#include <cstdio>
#include <cmath>
#include <array>
#include <optional>
#include <vector>
#include "iongate/constants.hpp"
#include "iongate/atomic.hpp"
#include "iongate/stark.hpp"
#include "iongate/scatter.hpp"
#include "iongate/merit.hpp"
#include "iongate/design.hpp"

using namespace iongate;

struct MixedLevel {
  double omega;            // offset above S,-1/2 (incl. ground shift)
  // amp[g][lambda+1]: coupling amplitude from ground g (0=down,1=up)
  double amp[2][3];
};

struct MixedModel {
  double dz, qubit;
  std::vector<MixedLevel> levels;
};

MixedModel build(const IonSpecies& s, double B) {
  MixedModel m;
  m.dz = kBohrMagneton * B / kHbar;
  m.qubit = 2 * m.dz;
  const double xi = (2.0 / 3.0) * s.omega_fs;
  const double wc = s.omega0 - 0.5 * xi;
  auto add = [&](double e, std::array<double,3> dn, std::array<double,3> up) {
    MixedLevel l;
    l.omega = wc + e + m.dz;
    for (int k = 0; k < 3; ++k) { l.amp[0][k] = dn[k]; l.amp[1][k] = up[k]; }
    m.levels.push_back(l);
  };
  // stretches
  add(0.5 * xi + 2 * m.dz, {0,0,0}, {0,0,1});   // P32 +3/2: sigma+ from up
  add(0.5 * xi - 2 * m.dz, {1,0,0}, {0,0,0});   // P32 -3/2: sigma- from down
  // mJ = +1/2 block: basis {|0,up>, |1,down>}
  {
    const double a = m.dz, d = -0.5 * xi, c = xi / std::sqrt(2.0);
    const double mm = 0.5 * (a + d), r = std::hypot(0.5 * (a - d), c);
    for (double e : {mm + r, mm - r}) {
      // eigenvector: (c, e - a) normalized -> components on (|0,up>, |1,down>)
      double v1 = c, v2 = e - a;
      const double n = std::hypot(v1, v2);
      v1 /= n; v2 /= n;
      // from up via pi -> |0,up>, from down via sigma+ -> |1,down>
      add(e, {0,0,v2}, {0,v1,0});
    }
  }
  // mJ = -1/2 block: basis {|0,down>, |-1,up>}
  {
    const double a = -m.dz, d = -0.5 * xi, c = xi / std::sqrt(2.0);
    const double mm = 0.5 * (a + d), r = std::hypot(0.5 * (a - d), c);
    for (double e : {mm + r, mm - r}) {
      double v1 = c, v2 = e - a;
      const double n = std::hypot(v1, v2);
      v1 /= n; v2 /= n;
      // from down via pi -> |0,down>, from up via sigma- -> |-1,up>
      add(e, {0,v1,0}, {v2,0,0});
    }
  }
  return m;
}

struct Coeffs { double a_up, a_down, b_up, b_down; };

Coeffs stark(const MixedModel& m, const IonSpecies& s, double detuning) {
  Coeffs c{0,0,0,0};
  for (const auto& l : m.levels) {
    for (int g : {0, 1}) {
      const double ground = g ? m.qubit : 0.0;
      const double den = detuning + s.omega0 - (l.omega - ground);
      const double pi = l.amp[g][1];
      const double sig = 0.5 * (l.amp[g][0]*l.amp[g][0] + l.amp[g][2]*l.amp[g][2]);
      if (g) { c.a_up += pi*pi/den; c.b_up += sig/den; }
      else   { c.a_down += pi*pi/den; c.b_down += sig/den; }
    }
  }
  return c;
}

std::optional<double> null_angle(const MixedModel& m, const IonSpecies& s, double d) {
  const auto c = stark(m, s, d);
  const double t2 = -(c.a_up - c.a_down) / (c.b_up - c.b_down);
  if (t2 <= 0) return std::nullopt;
  return std::atan(std::sqrt(t2));
}
std::optional<double> bal_angle(const MixedModel& m, const IonSpecies& s, double d) {
  const auto c = stark(m, s, d);
  const double t2 = (c.a_up + c.a_down) / (c.b_up + c.b_down);
  if (t2 <= 0) return std::nullopt;
  return std::atan(std::sqrt(t2));
}

int main() {
  const auto be = load_species("be9");
  const auto m = build(be, 4.46);

  // Couplings at 4.46 T (squared weights)
  std::printf("mixed squared weights (pi up, sig+ dn | levels 2,3):\n");
  for (size_t i = 2; i < 6; ++i) {
    std::printf("  level %zu: dn(%0.4f %0.4f %0.4f) up(%0.4f %0.4f %0.4f)  E=%9.3f\n", i,
      m.levels[i].amp[0][0]*m.levels[i].amp[0][0], m.levels[i].amp[0][1]*m.levels[i].amp[0][1],
      m.levels[i].amp[0][2]*m.levels[i].amp[0][2], m.levels[i].amp[1][0]*m.levels[i].amp[1][0],
      m.levels[i].amp[1][1]*m.levels[i].amp[1][1], m.levels[i].amp[1][2]*m.levels[i].amp[1][2],
      to_ghz(m.levels[i].omega - m.dz) - to_ghz(be.omega0));
  }

  // Null and balance angles at key detunings
  for (double d : {-5.29, -142.6, -267.45, 299.3, 431.4, 306.55}) {
    auto n = null_angle(m, be, from_ghz(d));
    auto b = bal_angle(m, be, from_ghz(d));
    std::printf("D=%8.2f: phi_null=%6.2f  phi_F=%6.2f\n", d,
                n ? rad_to_deg(*n) : -1.0, b ? rad_to_deg(*b) : -1.0);
  }

  // Joint point: scan gap
  double prev_gap = 0; bool have = false;
  for (double d = -15.0; d <= -0.05; d += 0.01) {
    auto n = null_angle(m, be, from_ghz(d));
    auto b = bal_angle(m, be, from_ghz(d));
    if (!n || !b) { have = false; continue; }
    const double gap = *n - *b;
    if (have && (prev_gap >= 0) != (gap >= 0)) {
      std::printf("joint crossing near %.3f GHz (phi=%.3f)\n", d, rad_to_deg(*n));
    }
    prev_gap = gap; have = true;
  }

  // MS1 two-beam null scan: b_pi^2 dA(carrier) + b_sig^2 dB(sideband) = 0
  for (double ratio : {1.0, std::sqrt(2.0), 1.0/std::sqrt(2.0)}) {
    const double bpi2 = 2.0 / (1.0 + ratio*ratio), bs2 = 2.0 - bpi2;
    double prev = 0; bool hp = false;
    std::printf("MS1 roots (ratio %.3f): ", ratio);
    for (double d = -250; d <= 250; d += 0.02) {
      const auto cc = stark(m, be, from_ghz(d) - m.qubit);
      const auto cs = stark(m, be, from_ghz(d));
      const double v = bpi2 * (cc.a_up - cc.a_down) + bs2 * (cs.b_up - cs.b_down);
      if (hp && (prev >= 0) != (v >= 0) && std::abs(v) < std::abs(prev) * 10 + 1e-9*std::abs(v)) {
        // crude pole filter: require |v| small relative to neighbors
        if (std::abs(v) < 1e-13) std::printf("%.2f ", d);
        else std::printf("[%.2f] ", d);
      }
      prev = v; hp = true;
    }
    std::printf("\n");
  }
  return 0;
}

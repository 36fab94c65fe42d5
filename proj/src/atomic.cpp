#include "iongate/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "iongate/constants.hpp"

namespace iongate {

double IonSpecies::wavelength() const { return kTwoPi * kSpeedOfLight / omega0; }

IonSpecies make_species(const std::string& name, double mass_amu,
                        double wavelength_nm, double fs_split_ghz,
                        double gamma_mhz) {
  if (mass_amu <= 0.0 || wavelength_nm <= 0.0 || fs_split_ghz <= 0.0 ||
      gamma_mhz <= 0.0) {
    throw std::invalid_argument("species constants must be strictly positive");
  }
  IonSpecies s;
  s.name = name;
  s.mass = mass_amu * kAmu;
  s.omega0 = kTwoPi * kSpeedOfLight / (wavelength_nm * 1e-9);
  s.omega_fs = from_ghz(fs_split_ghz);
  s.gamma = from_mhz(gamma_mhz);
  if (s.omega_fs >= s.omega0) {
    throw std::invalid_argument("fine-structure splitting exceeds the optical frequency");
  }
  // mu^2 = 3 pi eps0 hbar c^3 gamma / omega0^3
  const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
  s.mu = std::sqrt(3.0 * kPi * kEpsilon0 * kHbar * c3 * s.gamma /
                   (s.omega0 * s.omega0 * s.omega0));
  return s;
}

namespace {

const std::map<std::string, IonSpecies>& registry() {
  static const std::map<std::string, IonSpecies> reg = [] {
    std::map<std::string, IonSpecies> r;
    // 9Be+ ion mass; P-state decay rate and fine structure as used for the
    // 313 nm S1/2 - P3/2 line.
    r["be9"] = make_species("be9", 9.0121831 - kElectronMassAmu, 313.0, 197.0,
                            17.0);
    // 24Mg+: 279.6 nm D2 line, 2745 GHz fine structure.
    r["mg24"] = make_species("mg24", 23.985041697 - kElectronMassAmu, 279.6,
                             2745.0, 41.0);
    return r;
  }();
  return reg;
}

std::string known_names() {
  std::string out;
  for (const auto& [k, v] : registry()) {
    if (!out.empty()) out += ", ";
    out += k;
  }
  return out;
}

} // namespace

std::vector<std::string> registered_species() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

IonSpecies load_species(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown species \"" + name +
                                "\" (registered: " + known_names() + ")");
  }
  return it->second;
}

IonSpecies load_species(const std::string& name,
                        const std::string& constants_file) {
  if (registry().count(name)) return registry().at(name);

  std::ifstream in(constants_file);
  if (!in) {
    throw std::invalid_argument("cannot open species constants file: " +
                                constants_file);
  }
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const char* ws = " \t\r\n";
      s.erase(0, s.find_first_not_of(ws));
      auto e = s.find_last_not_of(ws);
      s.erase(e == std::string::npos ? 0 : e + 1);
      return s;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto need = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw std::invalid_argument("species constants file missing key: " + key);
    }
    return it->second;
  };
  if (need("name") != name) {
    throw std::invalid_argument("unknown species \"" + name +
                                "\" (registered: " + known_names() +
                                "; constants file defines \"" + kv["name"] +
                                "\")");
  }
  return make_species(name, std::stod(need("mass_amu")),
                      std::stod(need("wavelength_nm")),
                      std::stod(need("fs_split_ghz")),
                      std::stod(need("gamma_mhz")));
}

const Level& LevelScheme::level(Manifold m, int two_mj) const {
  for (const auto& l : levels) {
    if (l.manifold == m && l.two_mj == two_mj) return l;
  }
  throw std::invalid_argument("no such level");
}

namespace {

// Fills the S1/2 pair and converts P energies (given relative to the
// zero-field ground-state centroid) into offsets above S1/2 mJ=-1/2.
LevelScheme assemble(double field_tesla, double e32_p3, double e32_m3,
                     double e_p1[2], double e_m1[2]) {
  LevelScheme scheme;
  scheme.field = field_tesla;
  scheme.delta_z = kBohrMagneton * field_tesla / kHbar;
  scheme.qubit_splitting = 2.0 * scheme.delta_z;
  const double dz = scheme.delta_z;

  scheme.levels[0] = {Manifold::S12, -1, 0.0};
  scheme.levels[1] = {Manifold::S12, +1, scheme.qubit_splitting};
  scheme.levels[2] = {Manifold::P12, -1, e_m1[0] + dz};
  scheme.levels[3] = {Manifold::P12, +1, e_p1[0] + dz};
  scheme.levels[4] = {Manifold::P32, -3, e32_m3 + dz};
  scheme.levels[5] = {Manifold::P32, -1, e_m1[1] + dz};
  scheme.levels[6] = {Manifold::P32, +1, e_p1[1] + dz};
  scheme.levels[7] = {Manifold::P32, +3, e32_p3 + dz};
  return scheme;
}

} // namespace

LevelScheme level_energies(const IonSpecies& species, double field_tesla) {
  if (field_tesla < 0.0 || field_tesla > 4.5) {
    throw std::domain_error(
        "field outside [0, 4.5] T: the pure-J coupling treatment of the P "
        "manifold is only controlled up to 4.5 T");
  }
  const double dz = kBohrMagneton * field_tesla / kHbar;
  const double xi = (2.0 / 3.0) * species.omega_fs;
  // Offset placing the zero-field P3/2 level at omega0 relative to the
  // zero-field ground-state centroid.
  const double wc = species.omega0 - 0.5 * xi;

  // Stretched states |mL=+-1, mS=+-1/2>: no mixing.
  const double e32_p3 = wc + 0.5 * xi + 2.0 * dz;
  const double e32_m3 = wc + 0.5 * xi - 2.0 * dz;

  // mJ = +-1/2 blocks in the |mL, mS> basis {(0, +-1/2), (+-1, -+1/2)}:
  //   diag = { xi*mL*mS + dz*(mL + 2 mS) }, off-diag = xi/sqrt(2).
  auto diag2 = [&](double a, double d, double out[2]) {
    const double m = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), xi / std::sqrt(2.0));
    out[0] = wc + m - r; // connects to P1/2 at B = 0
    out[1] = wc + m + r; // connects to P3/2 at B = 0
  };
  double e_p1[2], e_m1[2];
  diag2(dz, -0.5 * xi, e_p1);  // mJ = +1/2: (0,+1/2) and (1,-1/2)
  diag2(-dz, -0.5 * xi, e_m1); // mJ = -1/2: (0,-1/2) and (-1,+1/2)

  return assemble(field_tesla, e32_p3, e32_m3, e_p1, e_m1);
}

LevelScheme level_energies_linear_zeeman(const IonSpecies& species,
                                         double field_tesla) {
  if (field_tesla < 0.0 || field_tesla > 4.5) {
    throw std::domain_error("field outside [0, 4.5] T");
  }
  const double dz = kBohrMagneton * field_tesla / kHbar;
  const double w32 = species.omega0;
  const double w12 = species.omega0 - species.omega_fs;
  // Lande factors: g(P3/2) = 4/3, g(P1/2) = 2/3.
  const double e32_p3 = w32 + 2.0 * dz;
  const double e32_m3 = w32 - 2.0 * dz;
  double e_p1[2] = {w12 + dz / 3.0, w32 + 2.0 * dz / 3.0};
  double e_m1[2] = {w12 - dz / 3.0, w32 - 2.0 * dz / 3.0};
  return assemble(field_tesla, e32_p3, e32_m3, e_p1, e_m1);
}

double coupling(int two_mj_ground, Manifold excited, int two_mj_excited,
                int lambda) {
  if (excited == Manifold::S12) return 0.0;
  if (std::abs(two_mj_ground) != 1) return 0.0;
  if (two_mj_excited != two_mj_ground + 2 * lambda) return 0.0;
  const int max_two_mj = (excited == Manifold::P32) ? 3 : 1;
  if (std::abs(two_mj_excited) > max_two_mj) return 0.0;

  // Clebsch-Gordan coefficients <1, mL; 1/2, mS | J, mJ> with mS equal to
  // the ground-state projection (the dipole operator acts on L only):
  //   J = 3/2:  mS = +1/2 -> sqrt((3/2 + mJ)/3),  mS = -1/2 -> sqrt((3/2 - mJ)/3)
  //   J = 1/2:  mS = +1/2 -> -sqrt((3/2 - mJ)/3), mS = -1/2 -> sqrt((3/2 + mJ)/3)
  const double mj = 0.5 * two_mj_excited;
  const bool spin_up = two_mj_ground > 0;
  if (excited == Manifold::P32) {
    return spin_up ? std::sqrt((1.5 + mj) / 3.0) : std::sqrt((1.5 - mj) / 3.0);
  }
  return spin_up ? -std::sqrt((1.5 - mj) / 3.0) : std::sqrt((1.5 + mj) / 3.0);
}

} // namespace iongate

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace iongate {

// Immutable atomic constants of an alkali-like ion with a single valence
// electron (S1/2 ground state, P1/2 and P3/2 excited states).
struct IonSpecies {
  std::string name;
  double mass = 0.0;     // kg
  double omega0 = 0.0;   // rad/s, S1/2 - P3/2 splitting at zero field
  double omega_fs = 0.0; // rad/s, P3/2 - P1/2 fine-structure splitting
  double gamma = 0.0;    // rad/s, P-state spontaneous decay rate
  double mu = 0.0;       // C m, cycling-transition dipole matrix element

  double wavelength() const; // m, 2*pi*c/omega0
};

// Builds a species record from the raw constants; mu is derived from gamma
// through mu^2 = 3*pi*eps0*hbar*c^3*gamma/omega0^3 (cycling-line convention).
IonSpecies make_species(const std::string& name, double mass_amu,
                        double wavelength_nm, double fs_split_ghz,
                        double gamma_mhz);

// Looks up a built-in species ("be9", "mg24").  Throws std::invalid_argument
// listing the registered names if the species is unknown.
IonSpecies load_species(const std::string& name);

// Same, but also consults a plain-text constants file with key=value lines
// (name, mass_amu, wavelength_nm, fs_split_ghz, gamma_mhz; '#' comments).
IonSpecies load_species(const std::string& name,
                        const std::string& constants_file);

std::vector<std::string> registered_species();

enum class Manifold { S12, P12, P32 };

struct Level {
  Manifold manifold;
  int two_mj;   // 2*mJ
  double omega; // rad/s, offset above the S1/2 mJ=-1/2 level
};

// Level energies of the eight relevant states at a magnetic field B.
//
// Ground state: linear Zeeman with g_J = 2 exactly.  P manifold: exact
// diagonalization of H = xi L.S + mu_B (L_z + 2 S_z) B on the L=1, S=1/2
// space, with xi = (2/3) omega_fs so the zero-field P3/2 - P1/2 gap is
// reproduced.  The stretched mJ = +-3/2 states do not mix.
struct LevelScheme {
  double field = 0.0;           // T
  double delta_z = 0.0;         // rad/s, mu_B B / hbar
  double qubit_splitting = 0.0; // rad/s, 2 delta_z
  std::array<Level, 8> levels{};

  const Level& level(Manifold m, int two_mj) const;
};

// Valid for 0 <= B <= 4.5 T; beyond that the pure-J coupling approximation
// used downstream degrades and a std::domain_error is thrown.
LevelScheme level_energies(const IonSpecies& species, double field_tesla);

// Variant with linear-Zeeman P energies (Lande g factors 4/3 and 2/3), the
// level model underlying the large-detuning closed forms.  Used for
// cross-checks; not the production scheme.
LevelScheme level_energies_linear_zeeman(const IonSpecies& species,
                                         double field_tesla);

// Dimensionless dipole amplitude <J, mJ=two_mj_excited/2| d.eps_lambda
// |S1/2, mJ=two_mj_ground/2> / mu with Condon-Shortley phases, J treated as
// a good quantum number.  Selection-rule violations return exactly 0.
double coupling(int two_mj_ground, Manifold excited, int two_mj_excited,
                int lambda);

} // namespace iongate

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include "iongate/atomic.hpp"
#include "iongate/constants.hpp"

using namespace iongate;

TEST_CASE("registry constants") {
  const auto be = load_species("be9");
  CHECK(to_ghz(be.omega_fs) == doctest::Approx(197.0));
  CHECK(to_mhz(be.gamma) == doctest::Approx(17.0));
  CHECK(be.wavelength() == doctest::Approx(313e-9));
  CHECK(be.mass > 8.9 * kAmu);
  CHECK(be.mass < 9.1 * kAmu);

  const auto mg = load_species("mg24");
  CHECK(to_ghz(mg.omega_fs) == doctest::Approx(2745.0));
  CHECK(to_mhz(mg.gamma) == doctest::Approx(41.0));

  CHECK(be.mu > 0.0);
  CHECK(be.omega_fs < be.omega0);
  // mu^2 = 3 pi eps0 hbar c^3 gamma / omega0^3
  const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
  CHECK(be.mu * be.mu ==
        doctest::Approx(3.0 * kPi * kEpsilon0 * kHbar * c3 * be.gamma /
                        std::pow(be.omega0, 3)));
}

TEST_CASE("unknown species lists registered names") {
  CHECK_THROWS_AS(load_species("ca40"), std::invalid_argument);
  try {
    load_species("ca40");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find("unknown species") != std::string::npos);
    CHECK(what.find("be9") != std::string::npos);
    CHECK(what.find("mg24") != std::string::npos);
  }
}

TEST_CASE("species constants file") {
  const char* path = "test_species.cfg";
  {
    std::ofstream out(path);
    out << "# calcium-like test entry\n";
    out << "name = ca40x\n";
    out << "mass_amu = 39.96\n";
    out << "wavelength_nm = 397.0\n";
    out << "fs_split_ghz = 6700.0\n";
    out << "gamma_mhz = 23.4  # decay rate\n";
  }
  const auto ca = load_species("ca40x", path);
  CHECK(to_ghz(ca.omega_fs) == doctest::Approx(6700.0));
  CHECK(to_mhz(ca.gamma) == doctest::Approx(23.4));
  CHECK_THROWS_AS(load_species("sr88", path), std::invalid_argument);
  // Built-ins win without consulting the file.
  CHECK(load_species("be9", path).name == "be9");
}

TEST_CASE("qubit splitting at 4.46 T is about 124 GHz") {
  const auto be = load_species("be9");
  const auto scheme = level_energies(be, 4.46);
  CHECK(to_ghz(scheme.qubit_splitting) == doctest::Approx(124.0).epsilon(0.01));
  CHECK(scheme.levels[0].omega == 0.0);
  CHECK(scheme.level(Manifold::S12, -1).omega == 0.0);
  CHECK(scheme.level(Manifold::S12, +1).omega ==
        doctest::Approx(scheme.qubit_splitting));
}

TEST_CASE("zero-field degeneracy") {
  const auto be = load_species("be9");
  const auto scheme = level_energies(be, 0.0);
  for (const auto& level : scheme.levels) {
    if (level.manifold == Manifold::P32) {
      CHECK(level.omega == doctest::Approx(be.omega0));
    } else if (level.manifold == Manifold::P12) {
      CHECK(level.omega == doctest::Approx(be.omega0 - be.omega_fs));
    }
  }
}

TEST_CASE("stretched states shift by exactly +-2 delta_z") {
  const auto be = load_species("be9");
  for (double field : {0.5, 2.2, 4.46}) {
    const auto scheme = level_energies(be, field);
    const double dz = scheme.delta_z;
    // P energies relative to the zero-field P3/2 position, excluding the
    // ground-state offset contained in omega.
    const double base = be.omega0 + dz;
    CHECK(scheme.level(Manifold::P32, +3).omega - base ==
          doctest::Approx(2.0 * dz).epsilon(1e-12));
    CHECK(scheme.level(Manifold::P32, -3).omega - base ==
          doctest::Approx(-2.0 * dz).epsilon(1e-12));
  }
}

TEST_CASE("energies are monotone in mJ within each manifold") {
  const auto be = load_species("be9");
  const auto scheme = level_energies(be, 3.0);
  CHECK(scheme.level(Manifold::S12, -1).omega <
        scheme.level(Manifold::S12, +1).omega);
  CHECK(scheme.level(Manifold::P12, -1).omega <
        scheme.level(Manifold::P12, +1).omega);
  double prev = -1.0;
  for (int two_mj : {-3, -1, +1, +3}) {
    const double w = scheme.level(Manifold::P32, two_mj).omega;
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("field range guard") {
  const auto be = load_species("be9");
  CHECK_THROWS_AS(level_energies(be, 4.51), std::domain_error);
  CHECK_THROWS_AS(level_energies(be, -0.1), std::domain_error);
}

// Second-order perturbation theory in the Zeeman coupling between the two
// mJ = +-1/2 fine-structure partners.
static double pt2_energy(const IonSpecies& s, double field, Manifold m,
                         int two_mj) {
  const double dz = kBohrMagneton * field / kHbar;
  const double xi = (2.0 / 3.0) * s.omega_fs;
  const double mj = 0.5 * two_mj;
  const double g = (m == Manifold::P32) ? 4.0 / 3.0 : 2.0 / 3.0;
  const double base =
      (m == Manifold::P32) ? s.omega0 : s.omega0 - s.omega_fs;
  double e = base + g * mj * dz;
  if (std::abs(two_mj) == 1) {
    // <3/2 mJ|Lz + 2Sz|1/2 mJ> = -sqrt(2)/3 for mJ = +-1/2 blocks; the
    // coupling magnitude is what enters squared.
    const double v = std::sqrt(2.0) / 3.0 * dz;
    const double sign = (m == Manifold::P32) ? 1.0 : -1.0;
    e += sign * v * v / s.omega_fs;
  }
  return e;
}

TEST_CASE("diagonalization matches perturbation theory at 0.5 T") {
  const auto be = load_species("be9");
  const auto scheme = level_energies(be, 0.5);
  const double dz = scheme.delta_z;
  for (Manifold m : {Manifold::P12, Manifold::P32}) {
    for (int two_mj : {-1, +1}) {
      const double exact = scheme.level(m, two_mj).omega - dz;
      const double pt = pt2_energy(be, 0.5, m, two_mj);
      const double zeeman_shift = std::abs(exact - (m == Manifold::P32
                                                        ? be.omega0
                                                        : be.omega0 - be.omega_fs));
      CHECK(std::abs(exact - pt) < 0.005 * zeeman_shift);
    }
  }
}

TEST_CASE("mJ=+-1/2 shifts differ from linear Zeeman, bounded by 10% of dz") {
  const auto be = load_species("be9");
  const auto diag = level_energies(be, 4.46);
  const auto lin = level_energies_linear_zeeman(be, 4.46);
  for (Manifold m : {Manifold::P12, Manifold::P32}) {
    for (int two_mj : {-1, +1}) {
      const double diff =
          std::abs(diag.level(m, two_mj).omega - lin.level(m, two_mj).omega);
      CHECK(diff > 0.0);
      CHECK(diff <= 0.10 * diag.delta_z);
    }
  }
  // Stretched states are identical in both schemes.
  CHECK(diag.level(Manifold::P32, 3).omega ==
        doctest::Approx(lin.level(Manifold::P32, 3).omega));
}

TEST_CASE("coupling weight table") {
  // Cycling line and its mirror.
  CHECK(coupling(+1, Manifold::P32, +3, +1) == doctest::Approx(1.0));
  CHECK(coupling(-1, Manifold::P32, -3, -1) == doctest::Approx(1.0));
  // pi weights: 2/3 in P3/2, 1/3 in P1/2.
  CHECK(std::pow(coupling(+1, Manifold::P32, +1, 0), 2) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(std::pow(coupling(+1, Manifold::P12, +1, 0), 2) ==
        doctest::Approx(1.0 / 3.0));
  // Weak sigma within P3/2 and strong within P1/2.
  CHECK(std::pow(coupling(+1, Manifold::P32, -1, -1), 2) ==
        doctest::Approx(1.0 / 3.0));
  CHECK(std::pow(coupling(+1, Manifold::P12, -1, -1), 2) ==
        doctest::Approx(2.0 / 3.0));

  // Selection rules return exactly zero.
  CHECK(coupling(+1, Manifold::P32, +3, 0) == 0.0);
  CHECK(coupling(+1, Manifold::P32, +1, +1) == 0.0);
  CHECK(coupling(-1, Manifold::P12, -3, -1) == 0.0);
  CHECK(coupling(+1, Manifold::S12, +1, 0) == 0.0);
}

TEST_CASE("line-strength sums: 2 per ground state in P3/2, 1 in P1/2") {
  for (int ground : {-1, +1}) {
    double p32 = 0.0, p12 = 0.0;
    int nonzero = 0;
    for (int lambda : {-1, 0, +1}) {
      for (int two_mj : {-3, -1, +1, +3}) {
        const double c32 = coupling(ground, Manifold::P32, two_mj, lambda);
        const double c12 = coupling(ground, Manifold::P12, two_mj, lambda);
        p32 += c32 * c32;
        p12 += c12 * c12;
        nonzero += (c32 != 0.0) + (c12 != 0.0);
      }
    }
    CHECK(p32 == doctest::Approx(2.0));
    CHECK(p12 == doctest::Approx(1.0));
    CHECK(p32 + p12 == doctest::Approx(3.0));
    CHECK(nonzero == 5); // weights {1, 2/3, 1/3, 1/3, 2/3}
  }
}

TEST_CASE("mirror symmetry of squared couplings") {
  for (int lambda : {-1, 0, +1}) {
    for (int two_mj : {-3, -1, +1, +3}) {
      for (Manifold m : {Manifold::P12, Manifold::P32}) {
        const double a = coupling(+1, m, two_mj, lambda);
        const double b = coupling(-1, m, -two_mj, -lambda);
        CHECK(a * a == doctest::Approx(b * b));
      }
    }
  }
}

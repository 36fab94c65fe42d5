#pragma once

#include <stdexcept>
#include <string>

namespace iongate {

// A beam sits exactly on an atomic resonance; the perturbative treatment
// has no finite answer there.  Sweeps catch this and flag the grid point.
class ResonanceError : public std::runtime_error {
 public:
  explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

// A root / operating-point search failed to bracket a solution.
class SearchError : public std::runtime_error {
 public:
  explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace iongate

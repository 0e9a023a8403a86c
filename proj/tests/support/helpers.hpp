#pragma once

#include <cmath>
#include <cstddef>
#include <random>

#include "oracles.hpp"
#include "spinpair/separability.hpp"
#include "spinpair/states.hpp"

namespace testing_support {

/// Cells where the concurrence and PPT verdicts disagree. PPT is exact for
/// two qubits, so any nonzero count is a defect.
inline std::size_t detector_disagreements(const spinpair::ScanGrid& grid) {
  std::size_t bad = 0;
  for (const auto& cell : grid.cells) {
    if (!cell.in_domain) continue;
    const bool by_c = cell.concurrence > 1e-9;
    const bool by_ppt = cell.ppt_min_eig < -1e-12;
    if (by_c != by_ppt) ++bad;
  }
  return bad;
}

/// Uniform draw of all nine parameters from the cube, valid or not.
inline spinpair::BlochState cube_point(spinpair::FamilyTag f, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::array<double, 9> p;
  for (auto& v : p) v = u(rng);
  return spinpair::BlochState::from_params(f, p);
}

}  // namespace testing_support

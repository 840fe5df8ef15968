#pragma once

#include <cstdint>
#include <random>

#include "oamkit/grid.hpp"

namespace oamkit {

// Deterministic Gaussian sampler on top of the (bit-specified) mt19937_64
// stream. std::normal_distribution is implementation-defined, so Box-Muller
// is rolled by hand to keep the draw sequence pinned.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}
    double next();
    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Band-limited Gaussian random field times a Gaussian envelope: complex
// normal coefficients on plane waves with |m_x|, |m_y| <= 6 (dk = pi/L),
// envelope width L/7 so the boundary decay guard holds with margin.
// Identical (grid, hbar, seed) gives bitwise-identical states.
GridState random_state(const GridSpec& grid, double hbar, std::uint64_t seed);

}  // namespace oamkit

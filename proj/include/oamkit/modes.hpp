#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "oamkit/grid.hpp"

namespace oamkit {

struct ModeSpec;

// Laguerre-Gauss beam at the waist plane: radial index p >= 0, integer
// winding l, waist > 0. No propagation phase.
struct LaguerreGauss {
    int p = 0;
    int l = 0;
    double waist = 2.0;
};

// Gaussian annulus f(r) = exp(-(r-r0)^2 / (2 width^2)) carrying phase
// e^{i l phi}. r0 = 0 with l = 0 degenerates to an isotropic Gaussian.
struct RingGauss {
    int l = 0;
    double r0 = 5.5;
    double width = 1.0;
};

struct OffsetGauss {
    double x0 = 0.0;
    double y0 = 0.0;
    double width = 1.5;
};

struct Superposition {
    std::vector<std::pair<cplx, ModeSpec>> terms;
};

struct ModeSpec {
    std::variant<LaguerreGauss, RingGauss, OffsetGauss, Superposition> value;
};

// Samples the mode on the grid and normalizes. Each superposition term is
// normalized before weighting, so weight moduli map directly onto occupation
// probabilities for orthogonal terms.
//
// Throws FeatureExceedsGrid when the result would violate the boundary decay
// guard (checked both a priori for RingGauss, r0 + 5 width < L, and a
// posteriori on the sampled field), EmptySuperposition, ZeroNorm.
GridState synthesize(const ModeSpec& mode, const GridSpec& grid, double hbar = 1.0);

}  // namespace oamkit

#include "oamkit/modes.hpp"

#include <cmath>

namespace oamkit {

namespace {

double laguerre(int p, int alpha, double s) {
    if (p == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 + alpha - s;
    for (int k = 1; k < p; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 + alpha - s) * lk - (k + alpha) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

GridState sample_lg(const LaguerreGauss& m, const GridSpec& grid, double hbar) {
    if (!(m.waist > 0.0)) throw GridError("LaguerreGauss: waist must be positive");
    if (m.p < 0) throw GridError("LaguerreGauss: p must be >= 0");
    const int al = std::abs(m.l);
    return GridState::from_field(
        grid,
        [&](double x, double y) {
            const double r2 = x * x + y * y;
            const double s = 2.0 * r2 / (m.waist * m.waist);
            const double radial =
                std::pow(std::sqrt(s), al) * laguerre(m.p, al, s) * std::exp(-r2 / (m.waist * m.waist));
            const double phi = std::atan2(y, x);
            return radial * std::polar(1.0, m.l * phi);
        },
        hbar);
}

GridState sample_ring(const RingGauss& m, const GridSpec& grid, double hbar) {
    if (!(m.width > 0.0)) throw GridError("RingGauss: width must be positive");
    if (m.r0 < 0.0) throw GridError("RingGauss: r0 must be >= 0");
    if (m.r0 + 5.0 * m.width >= grid.half_extent)
        throw FeatureExceedsGrid("RingGauss: r0 + 5 width must be below half_extent");
    return GridState::from_field(
        grid,
        [&](double x, double y) {
            const double r = std::hypot(x, y);
            const double d = r - m.r0;
            const double radial = std::exp(-d * d / (2.0 * m.width * m.width));
            const double phi = std::atan2(y, x);
            return radial * std::polar(1.0, m.l * phi);
        },
        hbar);
}

GridState sample_gauss(const OffsetGauss& m, const GridSpec& grid, double hbar) {
    if (!(m.width > 0.0)) throw GridError("OffsetGauss: width must be positive");
    return GridState::from_field(
        grid,
        [&](double x, double y) {
            const double dx = x - m.x0;
            const double dy = y - m.y0;
            return cplx{std::exp(-(dx * dx + dy * dy) / (2.0 * m.width * m.width)), 0.0};
        },
        hbar);
}

}  // namespace

GridState synthesize(const ModeSpec& mode, const GridSpec& grid, double hbar) {
    GridState raw = std::visit(
        [&](const auto& m) -> GridState {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, LaguerreGauss>) {
                return sample_lg(m, grid, hbar);
            } else if constexpr (std::is_same_v<T, RingGauss>) {
                return sample_ring(m, grid, hbar);
            } else if constexpr (std::is_same_v<T, OffsetGauss>) {
                return sample_gauss(m, grid, hbar);
            } else {
                if (m.terms.empty()) throw EmptySuperposition();
                std::vector<GridState> parts;
                std::vector<cplx> weights;
                parts.reserve(m.terms.size());
                for (const auto& [w, sub] : m.terms) {
                    parts.push_back(synthesize(sub, grid, hbar));
                    weights.push_back(w);
                }
                return superpose(parts, weights);
            }
        },
        mode.value);

    GridState state = normalize(raw);
    if (!state.decay_guard_ok())
        throw FeatureExceedsGrid("synthesized mode violates the boundary decay guard");
    return state;
}

}  // namespace oamkit

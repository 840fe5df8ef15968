#include "oamkit/random_field.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace oamkit {

double GaussianRng::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // 53-bit uniforms; u1 in (0,1] so the log is finite
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

GridState random_state(const GridSpec& grid, double hbar, std::uint64_t seed) {
    grid.validate();
    constexpr int kBand = 6;
    const int nmodes = 2 * kBand + 1;
    GaussianRng rng(seed);

    // coefficients in fixed draw order: mx outer, my inner
    std::vector<cplx> coef(static_cast<std::size_t>(nmodes) * nmodes);
    for (int i = 0; i < nmodes * nmodes; ++i) coef[i] = cplx{rng.next(), rng.next()};

    const double dk = std::numbers::pi / grid.half_extent;
    auto phase_table = [&](int n, auto coord) {
        std::vector<cplx> t(static_cast<std::size_t>(nmodes) * n);
        for (int m = 0; m < nmodes; ++m) {
            const double km = dk * (m - kBand);
            for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(m) * n + j] = std::polar(1.0, km * coord(j));
        }
        return t;
    };
    const auto ex = phase_table(grid.nx, [&](int j) { return grid.x(j); });
    const auto ey = phase_table(grid.ny, [&](int j) { return grid.y(j); });

    // separable evaluation: T[my][ix] = sum_mx coef * ex, then contract over my
    std::vector<cplx> t(static_cast<std::size_t>(nmodes) * grid.nx, cplx{0.0, 0.0});
    for (int my = 0; my < nmodes; ++my)
        for (int mx = 0; mx < nmodes; ++mx) {
            const cplx a = coef[static_cast<std::size_t>(mx) * nmodes + my];
            const cplx* row = &ex[static_cast<std::size_t>(mx) * grid.nx];
            cplx* out = &t[static_cast<std::size_t>(my) * grid.nx];
            for (int ix = 0; ix < grid.nx; ++ix) out[ix] += a * row[ix];
        }

    const double env_w = grid.half_extent / 7.0;
    std::vector<cplx> amps(grid.size(), cplx{0.0, 0.0});
    for (int iy = 0; iy < grid.ny; ++iy) {
        cplx* out = &amps[static_cast<std::size_t>(iy) * grid.nx];
        for (int my = 0; my < nmodes; ++my) {
            const cplx f = ey[static_cast<std::size_t>(my) * grid.ny + iy];
            const cplx* row = &t[static_cast<std::size_t>(my) * grid.nx];
            for (int ix = 0; ix < grid.nx; ++ix) out[ix] += f * row[ix];
        }
        const double y = grid.y(iy);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double x = grid.x(ix);
            out[ix] *= std::exp(-(x * x + y * y) / (2.0 * env_w * env_w));
        }
    }
    return normalize(GridState::from_amplitudes(grid, std::move(amps), hbar));
}

}  // namespace oamkit

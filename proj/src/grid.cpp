#include "oamkit/grid.hpp"

#include <algorithm>
#include <cmath>

namespace oamkit {

MomentOrderTooLarge::MomentOrderTooLarge(int n)
    : GridError("MomentOrderTooLarge: n = " + std::to_string(n) + " exceeds cap " +
                std::to_string(kMaxMomentOrder)) {}

void GridSpec::validate() const {
    if (nx < 16 || ny < 16) throw GridError("GridSpec: nx, ny must be >= 16");
    if (nx % 2 != 0 || ny % 2 != 0) throw GridError("GridSpec: nx, ny must be even");
    if (!(half_extent > 0.0)) throw GridError("GridSpec: half_extent must be positive");
}

namespace {

bool compute_decay_guard(const GridSpec& g, const std::vector<cplx>& amps) {
    double global = 0.0;
    for (const cplx& a : amps) global = std::max(global, std::abs(a));
    if (global == 0.0) return true;
    double edge = 0.0;
    auto look = [&](int ix, int iy) {
        edge = std::max(edge, std::abs(amps[static_cast<std::size_t>(iy) * g.nx + ix]));
    };
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix : {0, 1, g.nx - 2, g.nx - 1}) look(ix, iy);
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy : {0, 1, g.ny - 2, g.ny - 1}) look(ix, iy);
    return edge <= kDecayGuardRatio * global;
}

}  // namespace

GridState::GridState(GridSpec grid, std::vector<cplx> amps, double hbar)
    : grid_(grid), amps_(std::move(amps)), hbar_(hbar) {
    grid_.validate();
    if (!(hbar_ > 0.0)) throw GridError("GridState: hbar must be positive");
    if (amps_.size() != grid_.size()) throw GridError("GridState: amplitude count mismatch");
    decay_ok_ = compute_decay_guard(grid_, amps_);
}

GridState GridState::from_amplitudes(const GridSpec& grid, std::vector<cplx> amps, double hbar) {
    return GridState(grid, std::move(amps), hbar);
}

GridState GridState::from_field(const GridSpec& grid,
                                const std::function<cplx(double, double)>& f, double hbar) {
    grid.validate();
    std::vector<cplx> amps(grid.size());
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double y = grid.y(iy);
        for (int ix = 0; ix < grid.nx; ++ix)
            amps[static_cast<std::size_t>(iy) * grid.nx + ix] = f(grid.x(ix), y);
    }
    return GridState(grid, std::move(amps), hbar);
}

double GridState::norm() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return std::sqrt(s * grid_.dx() * grid_.dy());
}

GridState normalize(const GridState& state) {
    const double n = state.norm();
    if (!(n > 1e-140)) throw ZeroNorm();
    std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
    const double inv = 1.0 / n;
    for (cplx& a : amps) a *= inv;
    return GridState::from_amplitudes(state.grid(), std::move(amps), state.hbar());
}

GridState superpose(std::span<const GridState> states, std::span<const cplx> weights) {
    if (states.empty() || states.size() != weights.size()) throw EmptySuperposition();
    const GridSpec& g = states[0].grid();
    const double hbar = states[0].hbar();
    double wscale = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!(states[i].grid() == g) || states[i].hbar() != hbar) throw GridMismatch();
        wscale += std::norm(weights[i]);
    }
    std::vector<cplx> amps(g.size(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto src = states[i].amplitudes();
        const cplx w = weights[i];
        for (std::size_t k = 0; k < amps.size(); ++k) amps[k] += w * src[k];
    }
    GridState combined = GridState::from_amplitudes(g, std::move(amps), hbar);
    // relative cancellation threshold: combined norm versus incoherent scale
    if (combined.norm() <= 1e-12 * std::sqrt(std::max(wscale, 1e-300))) throw ZeroNorm();
    return normalize(combined);
}

cplx overlap(const GridState& a, const GridState& b) {
    if (!(a.grid() == b.grid()) || a.hbar() != b.hbar()) throw GridMismatch();
    cplx s{0.0, 0.0};
    auto pa = a.amplitudes();
    auto pb = b.amplitudes();
    for (std::size_t k = 0; k < pa.size(); ++k) s += std::conj(pa[k]) * pb[k];
    return s * (a.grid().dx() * a.grid().dy());
}

GridState rotate_quarter(const GridState& state) {
    const GridSpec& g = state.grid();
    if (g.nx != g.ny) throw GridError("rotate_quarter: grid must be square");
    const int n = g.nx;
    auto src = state.amplitudes();
    std::vector<cplx> out(g.size());
    // psi'(x,y) = psi(y,-x): source index ix' = iy, iy' = (n - ix) mod n
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const int sx = iy;
            const int sy = (n - ix) % n;
            out[static_cast<std::size_t>(iy) * n + ix] =
                src[static_cast<std::size_t>(sy) * n + sx];
        }
    }
    return GridState::from_amplitudes(g, std::move(out), state.hbar());
}

}  // namespace oamkit

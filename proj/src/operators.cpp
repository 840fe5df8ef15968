#include "oamkit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oamkit/spectral.hpp"

namespace oamkit {

namespace {

std::size_t idx(const GridSpec& g, int ix, int iy) {
    return static_cast<std::size_t>(iy) * g.nx + ix;
}

void check_order(int n) {
    if (n < 1 || n > kMaxMomentOrder) throw MomentOrderTooLarge(n);
}

// z^n at every sample; n >= 1
std::vector<cplx> zn_table(const GridSpec& g, int n) {
    std::vector<cplx> out(g.size());
    for (int iy = 0; iy < g.ny; ++iy) {
        const double y = g.y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            cplx z{g.x(ix), y};
            cplx p = z;
            for (int k = 1; k < n; ++k) p *= z;
            out[idx(g, ix, iy)] = p;
        }
    }
    return out;
}

}  // namespace

cplx inner(const GridState& state, const Field& field) {
    if (!(state.grid() == field.grid)) throw GridMismatch();
    cplx s{0.0, 0.0};
    auto pa = state.amplitudes();
    for (std::size_t k = 0; k < pa.size(); ++k) s += std::conj(pa[k]) * field.values[k];
    return s * (field.grid.dx() * field.grid.dy());
}

double field_norm2(const Field& field) {
    double s = 0.0;
    for (const cplx& v : field.values) s += std::norm(v);
    return s * field.grid.dx() * field.grid.dy();
}

Field apply_momentum(const GridState& state, Axis axis) {
    const GridSpec& g = state.grid();
    std::vector<cplx> work(g.size());
    spectral::fft2(g, state.amplitudes().data(), work.data());
    if (axis == Axis::X) {
        const auto kx = spectral::wavenumbers(g.nx, g.half_extent, true);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) work[idx(g, ix, iy)] *= cplx{0.0, kx[ix]};
    } else {
        const auto ky = spectral::wavenumbers(g.ny, g.half_extent, true);
        for (int iy = 0; iy < g.ny; ++iy) {
            const cplx f{0.0, ky[iy]};
            for (int ix = 0; ix < g.nx; ++ix) work[idx(g, ix, iy)] *= f;
        }
    }
    spectral::ifft2(g, work.data(), work.data());
    // p = -i hbar d/d(axis); the i k factor above is d/d(axis)
    const cplx scale{0.0, -state.hbar()};
    for (cplx& v : work) v *= scale;
    return Field{g, state.hbar(), std::move(work)};
}

Field apply_L(const GridState& state) {
    const GridSpec& g = state.grid();
    Field py = apply_momentum(state, Axis::Y);
    Field px = apply_momentum(state, Axis::X);
    std::vector<cplx> out(g.size());
    for (int iy = 0; iy < g.ny; ++iy) {
        const double y = g.y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t k = idx(g, ix, iy);
            out[k] = g.x(ix) * py.values[k] - y * px.values[k];
        }
    }
    return Field{g, state.hbar(), std::move(out)};
}

namespace {

// Applies L to a raw field (used by commutator_residual on Z^n psi).
Field apply_L_field(const Field& f) {
    GridState tmp = GridState::from_amplitudes(f.grid, f.values, f.hbar);
    return apply_L(tmp);
}

}  // namespace

OamReport oam_statistics(const GridState& state) {
    Field lpsi = apply_L(state);
    const double mean = std::real(inner(state, lpsi));
    double var = field_norm2(lpsi) - mean * mean;
    if (var < 0.0) var = 0.0;  // round-off clamp
    return OamReport{mean, var, std::sqrt(var)};
}

MomentReport position_moment(const GridState& state, int n) {
    check_order(n);
    const GridSpec& g = state.grid();
    auto amps = state.amplitudes();
    cplx zm{0.0, 0.0};
    double rp = 0.0;
    for (int iy = 0; iy < g.ny; ++iy) {
        const double y = g.y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const double w = std::norm(amps[idx(g, ix, iy)]);
            if (w == 0.0) continue;
            const cplx z{g.x(ix), y};
            cplx p = z;
            double r2 = std::norm(z);
            double rpow = r2;
            for (int k = 1; k < n; ++k) {
                p *= z;
                rpow *= r2;
            }
            zm += w * p;
            rp += w * rpow;
        }
    }
    const double cell = g.dx() * g.dy();
    zm *= cell;
    rp *= cell;
    const cplx mu = (rp > 0.0) ? zm / std::sqrt(rp) : cplx{0.0, 0.0};
    return MomentReport{n, zm, rp, mu};
}

CovarianceReport covariance_terms(const GridState& state, int n) {
    check_order(n);
    const GridSpec& g = state.grid();
    const auto zn = zn_table(g, n);
    auto amps = state.amplitudes();
    Field lpsi = apply_L(state);

    const double cell = g.dx() * g.dy();
    double mean_L = 0.0, mean_xn = 0.0, mean_yn = 0.0;
    double lx = 0.0, ly = 0.0;  // Re<L psi | x_n psi>, Re<L psi | y_n psi>
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double xn = zn[k].real();
        const double yn = zn[k].imag();
        const double w = std::norm(amps[k]);
        mean_xn += w * xn;
        mean_yn += w * yn;
        const cplx c = std::conj(lpsi.values[k]) * amps[k];
        mean_L += std::real(std::conj(amps[k]) * lpsi.values[k]);
        lx += std::real(c) * xn;
        ly += std::real(c) * yn;
    }
    mean_L *= cell;
    mean_xn *= cell;
    mean_yn *= cell;
    lx *= cell;
    ly *= cell;
    return CovarianceReport{n, lx - mean_L * mean_xn, ly - mean_L * mean_yn, mean_xn, mean_yn};
}

cplx commutator_residual(const GridState& state, int n) {
    check_order(n);
    const GridSpec& g = state.grid();
    const auto zn = zn_table(g, n);
    auto amps = state.amplitudes();

    std::vector<cplx> znpsi(g.size());
    for (std::size_t k = 0; k < znpsi.size(); ++k) znpsi[k] = zn[k] * amps[k];
    Field l_znpsi = apply_L_field(Field{g, state.hbar(), std::move(znpsi)});

    Field lpsi = apply_L(state);
    const double cell = g.dx() * g.dy();
    cplx a{0.0, 0.0}, b{0.0, 0.0}, zm{0.0, 0.0};
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const cplx cbar = std::conj(amps[k]);
        a += cbar * l_znpsi.values[k];
        b += cbar * zn[k] * lpsi.values[k];
        zm += std::norm(amps[k]) * zn[k];
    }
    a *= cell;
    b *= cell;
    zm *= cell;
    return a - b - static_cast<double>(n) * state.hbar() * zm;
}

std::vector<double> angular_histogram(const GridState& state, int bins) {
    if (bins < 4) throw GridError("angular_histogram: bins must be >= 4");
    const GridSpec& g = state.grid();
    auto amps = state.amplitudes();
    const double cell = g.dx() * g.dy();
    const double h = std::max(g.dx(), g.dy());
    const int max_m = std::max(32, std::min(128, 2 * bins));

    // Probability mass per cell.
    std::vector<double> rho(g.size());
    double total = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k) {
        rho[k] = std::norm(amps[k]) * cell;
        total += rho[k];
    }

    // Angular harmonics c_m = sum rho * (zbar / sqrt(r^2 + eps_m^2))^m with a
    // regularization radius eps_m = max(4, m/2) * h that grows with m. The
    // kernel is smooth at the origin, so lattice anisotropy there cannot leak
    // into low harmonics, and the m-scaling keeps azimuthally undersampled
    // small-r cells exponentially suppressed. Split into phase times radial
    // damping: (zbar/|z|)^m * exp(-(m/2) log(1 + eps_m^2/r^2)).
    std::vector<cplx> c(max_m + 1, cplx{0.0, 0.0});
    for (int iy = 0; iy < g.ny; ++iy) {
        const double y = g.y(iy);
        for (int ix = 0; ix < g.nx; ++ix) {
            const std::size_t k = idx(g, ix, iy);
            if (rho[k] == 0.0) continue;
            const double x = g.x(ix);
            const double r2 = x * x + y * y;
            if (r2 == 0.0) continue;  // zbar^m vanishes at the origin sample
            const double inv_r = 1.0 / std::sqrt(r2);
            const cplx phase{x * inv_r, -y * inv_r};
            cplx ph = phase;
            for (int m = 1; m <= max_m; ++m) {
                const double eps = std::max(4.0, 0.5 * m) * h;
                const double expn = -0.5 * m * std::log1p(eps * eps / r2);
                if (expn < -45.0) break;  // damping grows with m; rest negligible
                c[m] += (rho[k] * std::exp(expn)) * ph;
                ph *= phase;
            }
        }
    }

    // Bin integrals of p(phi) = (1/2pi) [c0 + 2 sum Re(c_m e^{i m phi})].
    std::vector<double> out(bins, total / bins);
    const double pi = std::numbers::pi;
    for (int m = 1; m <= max_m; ++m) {
        for (int b = 0; b < bins; ++b) {
            const double a0 = -pi + 2.0 * pi * b / bins;
            const double a1 = -pi + 2.0 * pi * (b + 1) / bins;
            const cplx integ = (std::polar(1.0, m * a1) - std::polar(1.0, m * a0)) / cplx{0.0, double(m)};
            out[b] += std::real(c[m] * integ) / pi;
        }
    }
    return out;
}

MomentumRep momentum_representation(const GridState& state) {
    const GridSpec& g = state.grid();
    std::vector<cplx> amps(g.size());
    spectral::fft2(g, state.amplitudes().data(), amps.data());
    const double scale = g.dx() * g.dy() / (2.0 * std::numbers::pi);
    for (cplx& v : amps) v *= scale;
    const double dk_x = std::numbers::pi / g.half_extent;
    const double dk_y = std::numbers::pi / g.half_extent;
    return MomentumRep{g, std::move(amps), dk_x, dk_y};
}

}  // namespace oamkit

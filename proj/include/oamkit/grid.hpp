#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oamkit {

using cplx = std::complex<double>;

// Error taxonomy. Everything derives from GridError so callers can catch the
// whole family when mapping to CLI diagnostics.
struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroNorm : GridError {
    ZeroNorm() : GridError("ZeroNorm: wavefunction norm vanishes") {}
};
struct GridMismatch : GridError {
    GridMismatch() : GridError("GridMismatch: states live on different grids or hbar") {}
};
struct FeatureExceedsGrid : GridError {
    explicit FeatureExceedsGrid(const std::string& what) : GridError("FeatureExceedsGrid: " + what) {}
};
struct EmptySuperposition : GridError {
    EmptySuperposition() : GridError("EmptySuperposition: superposition needs at least one term") {}
};
struct MomentOrderTooLarge : GridError {
    explicit MomentOrderTooLarge(int n);
};

// Boundary amplitude (outermost two rows/columns) must stay below this
// fraction of the global maximum for spectral operators to be trustworthy.
inline constexpr double kDecayGuardRatio = 1e-8;
inline constexpr int kMaxMomentOrder = 8;

// Uniform centered grid over [-L, L) x [-L, L). Samples sit at
// (j - n/2) * d so the origin is always a sample point.
struct GridSpec {
    int nx = 256;
    int ny = 256;
    double half_extent = 12.0;

    double dx() const { return 2.0 * half_extent / nx; }
    double dy() const { return 2.0 * half_extent / ny; }
    double x(int ix) const { return (ix - nx / 2) * dx(); }
    double y(int iy) const { return (iy - ny / 2) * dy(); }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }

    bool operator==(const GridSpec&) const = default;

    // Throws GridError on invalid parameters (nx, ny even and >= 16, L > 0).
    void validate() const;
};

// Immutable normalized-or-raw complex field on a GridSpec. Row-major with y
// as the outer index: amplitude(ix, iy) = amps[iy * nx + ix].
class GridState {
  public:
    static GridState from_amplitudes(const GridSpec& grid, std::vector<cplx> amps,
                                     double hbar = 1.0);
    static GridState from_field(const GridSpec& grid,
                                const std::function<cplx(double, double)>& f,
                                double hbar = 1.0);

    const GridSpec& grid() const { return grid_; }
    double hbar() const { return hbar_; }
    std::span<const cplx> amplitudes() const { return amps_; }
    cplx at(int ix, int iy) const { return amps_[static_cast<std::size_t>(iy) * grid_.nx + ix]; }

    double norm() const;           // sqrt(sum |psi|^2 dx dy)
    bool decay_guard_ok() const { return decay_ok_; }

  private:
    GridState(GridSpec grid, std::vector<cplx> amps, double hbar);

    GridSpec grid_;
    std::vector<cplx> amps_;
    double hbar_ = 1.0;
    bool decay_ok_ = true;
};

// L2-normalizes; phases untouched. Throws ZeroNorm on vanishing input.
GridState normalize(const GridState& state);

// Pointwise weighted sum followed by normalization. All states must share
// grid and hbar. Throws ZeroNorm if the combination cancels.
GridState superpose(std::span<const GridState> states, std::span<const cplx> weights);

// <a|b> by Riemann sum with dx dy weights.
cplx overlap(const GridState& a, const GridState& b);

// Rotates the state by +90 degrees (counterclockwise), psi'(x,y) = psi(y,-x),
// as an exact index permutation. Requires a square grid.
GridState rotate_quarter(const GridState& state);

}  // namespace oamkit

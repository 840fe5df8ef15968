#pragma once

#include <vector>

#include "oamkit/grid.hpp"

namespace oamkit::spectral {

// Unnormalized forward 2D DFT (row-major, y outer). out may alias in.
void fft2(const GridSpec& grid, const cplx* in, cplx* out);

// Inverse of fft2 (scaled by 1/(nx*ny)).
void ifft2(const GridSpec& grid, const cplx* in, cplx* out);

// Angular wavenumbers 2*pi*m/(2L) in DFT index order (m = 0..n/2-1, -n/2..-1).
// When zero_nyquist is set the m = n/2 entry is zeroed, which keeps the
// spectral first derivative Hermitian on even-sized grids.
std::vector<double> wavenumbers(int n, double half_extent, bool zero_nyquist);

}  // namespace oamkit::spectral

#pragma once

#include <vector>

#include "oamkit/grid.hpp"

namespace oamkit {

enum class Axis { X, Y };

// Unnormalized operator output sharing the source quadrature.
struct Field {
    GridSpec grid;
    double hbar = 1.0;
    std::vector<cplx> values;
};

struct OamReport {
    double mean_L = 0.0;
    double var_L = 0.0;
    double sigma_L = 0.0;
};

struct MomentReport {
    int n = 0;
    cplx z_moment{0.0, 0.0};       // <Z^n>, units length^n
    double radial_power = 0.0;     // <(Z^dag Z)^n>, units length^{2n}
    cplx mu_n{0.0, 0.0};           // z_moment / sqrt(radial_power)
};

struct CovarianceReport {
    int n = 0;
    double cs_L_xn = 0.0;  // C_s(L, x_n)
    double cs_L_yn = 0.0;  // C_s(L, y_n)
    double mean_xn = 0.0;
    double mean_yn = 0.0;
};

struct MomentumRep {
    GridSpec grid;
    std::vector<cplx> amps;  // unitary convention: sum |amps|^2 dkx dky = 1
    double dkx = 0.0;
    double dky = 0.0;
};

// <psi|F> with dx dy quadrature weights.
cplx inner(const GridState& state, const Field& field);
double field_norm2(const Field& field);

// -i hbar d/dx (or d/dy) via the spectral derivative; exact for band-limited
// fields. Wavenumbers are 2*pi*m/(2L) with the Nyquist mode zeroed.
Field apply_momentum(const GridState& state, Axis axis);

// L psi = x (p_y psi) - y (p_x psi); position factors applied pointwise.
Field apply_L(const GridState& state);

OamReport oam_statistics(const GridState& state);

// n-th complex position moment; throws MomentOrderTooLarge for n > 8 or n < 1.
MomentReport position_moment(const GridState& state, int n);

// C_s(L, x_n) and C_s(L, y_n) with x_n = (Z^n + Z^dag^n)/2, y_n = (Z^n - Z^dag^n)/(2i).
CovarianceReport covariance_terms(const GridState& state, int n);

// <psi| (L Z^n - Z^n L) |psi> - n hbar <Z^n>; bounds the discretization error
// of the commutator identity on this state.
cplx commutator_residual(const GridState& state, int n);

// Marginal probability of the polar angle over `bins` equal bins covering
// [-pi, pi), via angular-harmonic resummation with a short-range regularized
// phase kernel (see implementation notes). Bins sum to the squared norm
// exactly (1 for normalized states).
std::vector<double> angular_histogram(const GridState& state, int bins);

// Momentum-space amplitudes in the unitary convention (Parseval holds with
// physical dk weights).
MomentumRep momentum_representation(const GridState& state);

}  // namespace oamkit

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oamkit/grid.hpp"
#include "oamkit/modes.hpp"
#include "oamkit/operators.hpp"

namespace oamkit {

// Default slack tolerance, in natural units, below which an inequality is
// declared violated. Sized for spectral discretization plus quadrature error.
inline constexpr double kSlackTol = 1e-9;

// rhs values at or below this are treated as exactly zero for ratio purposes.
inline constexpr double kRatioFloor = 1e-300;

enum class PairAxis { XPx, YPy };

struct InequalityReport {
    std::string name;   // robertson | schrodinger | result1 | result2 | result3 | result4
    int n = 0;          // moment order; 0 when inapplicable
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs
    double ratio = 0.0;  // lhs / rhs, +inf sentinel when rhs <= kRatioFloor
    bool satisfied = true;
};

InequalityReport check_robertson(const GridState& state, PairAxis pair, double tol = kSlackTol);
InequalityReport check_schrodinger(const GridState& state, PairAxis pair, double tol = kSlackTol);

// sigma(L) sqrt(<Z^dag Z>) >= (hbar/2) |<Z>|
InequalityReport check_result1(const GridState& state, double tol = kSlackTol);

// sigma(L) >= (n hbar / 2) |mu_n|
InequalityReport check_result2(const GridState& state, int n, double tol = kSlackTol);

// <(dL)^2> <(Z^dag Z)^n> >= |C_s(L,x_n) + (n hbar/2)<x_n>|^2
//                         + |C_s(L,y_n) + (n hbar/2)<y_n>|^2
InequalityReport check_result3(const GridState& state, int n, double tol = kSlackTol);

// Generator/order-parameter relation instantiated with G = L, Phi = Z on the
// grid; the commutator expectation is evaluated by operator composition.
InequalityReport check_result4_grid(const GridState& state, double tol = kSlackTol);

// All six families: robertson + schrodinger on both canonical pairs, result1,
// result2 and result3 for n = 1..max_n, result4.
std::vector<InequalityReport> standard_checks(const GridState& state, int max_n = 3,
                                              double tol = kSlackTol);

struct SweepResult {
    std::vector<InequalityReport> reports;  // one check_result1 per parameter
    // Minimum ratio over members with a meaningful bound (rhs above the slack
    // tolerance); +inf when the whole family is degenerate (eigenstates).
    double min_ratio = 0.0;
};

// Evaluates check_result1 across a parametrized mode family; report order
// matches the parameter order.
SweepResult tightness_sweep(const std::function<ModeSpec(double)>& family,
                            std::span<const double> params, const GridSpec& grid,
                            double hbar = 1.0, double tol = kSlackTol);

}  // namespace oamkit

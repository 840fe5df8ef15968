#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oamkit/grid.hpp"
#include "oamkit/inequality.hpp"
#include "oamkit/modes.hpp"
#include "oamkit/random_field.hpp"
#include "oracles.hpp"

using namespace oamkit;

namespace {

const GridSpec kGrid{256, 256, 12.0};

GridState ring_state(int l, double r0 = 5.5, double width = 1.0) {
    return synthesize(ModeSpec{RingGauss{l, r0, width}}, kGrid);
}

ModeSpec two_mode_spec(int l1, int l2, double w1, double r0, double width) {
    Superposition sup;
    sup.terms.emplace_back(cplx{std::sqrt(w1), 0.0}, ModeSpec{RingGauss{l1, r0, width}});
    sup.terms.emplace_back(cplx{std::sqrt(1.0 - w1), 0.0}, ModeSpec{RingGauss{l2, r0, width}});
    return ModeSpec{std::move(sup)};
}

GridState chirped_gauss(double width, double alpha) {
    return normalize(GridState::from_field(kGrid, [=](double x, double y) {
        return std::polar(std::exp(-(x * x + y * y) / (2.0 * width * width)),
                          0.5 * alpha * x * x);
    }));
}

}  // namespace

TEST_CASE("robertson: attainment on minimum-uncertainty and squeezed Gaussians") {
    GridState g = synthesize(ModeSpec{OffsetGauss{0.0, 0.0, 1.5}}, kGrid);
    InequalityReport r = check_robertson(g, PairAxis::XPx);
    CHECK(std::abs(r.ratio - 1.0) <= 1e-6);
    CHECK(r.satisfied);

    GridState squeezed = normalize(GridState::from_field(kGrid, [](double x, double y) {
        const double a = 1.5;
        return cplx{std::exp(-x * x / (2.0 * a * a) - y * y * a * a / 2.0), 0.0};
    }));
    InequalityReport rs = check_robertson(squeezed, PairAxis::XPx);
    CHECK(rs.lhs >= 0.5 - 1e-9);
    CHECK(std::abs(rs.ratio - 1.0) <= 1e-6);
    CHECK(std::abs(check_robertson(squeezed, PairAxis::YPy).ratio - 1.0) <= 1e-6);

    InequalityReport rr = check_robertson(ring_state(3), PairAxis::XPx);
    CHECK(rr.satisfied);
    CHECK(rr.slack > 0.0);
}

TEST_CASE("schrodinger: chirp covariance saturates, parity kills the cross term") {
    GridState chirp = chirped_gauss(1.2, 0.5);
    InequalityReport r = check_schrodinger(chirp, PairAxis::XPx);
    // analytic: C_s = alpha w^2 / 2 = 0.36, and the Gaussian attains equality
    CHECK(r.rhs - 0.25 > 1e-3);
    CHECK(std::abs(r.rhs - (0.36 * 0.36 + 0.25)) <= 1e-6);
    CHECK(std::abs(r.slack) <= 1e-10);

    GridState sym = synthesize(ModeSpec{OffsetGauss{0.0, 0.0, 1.5}}, kGrid);
    InequalityReport rsym = check_schrodinger(sym, PairAxis::XPx);
    InequalityReport rob = check_robertson(sym, PairAxis::XPx);
    CHECK(std::abs(rsym.rhs - rob.rhs * rob.rhs) <= 1e-10);

    GridState rnd = random_state(kGrid, 1.0, 42);
    CHECK(check_schrodinger(rnd, PairAxis::YPy).slack >= -1e-9);
}

TEST_CASE("schrodinger rhs dominates squared robertson rhs") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        GridState psi = random_state(kGrid, 1.0, seed);
        for (PairAxis pair : {PairAxis::XPx, PairAxis::YPy}) {
            const InequalityReport s = check_schrodinger(psi, pair);
            const InequalityReport r = check_robertson(psi, pair);
            CHECK(s.rhs >= r.rhs * r.rhs - 1e-12);
        }
    }
}

TEST_CASE("result1: eigenstate degeneracy and the narrow-ring ratio") {
    // lhs carries the cancellation floor of sigma(L) ~ sqrt(<L^2> eps), so it
    // vanishes at the 1e-6 scale rather than 1e-9; rhs has no such floor
    InequalityReport eig = check_result1(ring_state(3));
    CHECK(std::abs(eig.lhs) <= 1e-5);
    CHECK(std::abs(eig.rhs) <= 1e-9);
    CHECK(eig.satisfied);

    const double r0 = 5.0;
    GridState narrow = synthesize(two_mode_spec(0, 1, 0.5, r0, r0 / 20.0), kGrid);
    InequalityReport r = check_result1(narrow);
    CHECK(std::abs(r.ratio - 2.0) <= 0.02);
    oracles::TwoModeRing oracle{r0, r0 / 20.0, 0, 1, 0.5};
    CHECK(std::abs(r.ratio - oracle.result1_ratio()) <= 1e-6);

    for (std::uint64_t seed : {20u, 21u, 22u}) {
        CHECK(check_result1(random_state(kGrid, 1.0, seed)).slack >= -1e-9);
    }
}

TEST_CASE("result2: eigenstate equality, selection rule, narrow-ring ratio") {
    GridState eig = ring_state(2);
    for (int n : {1, 2, 3}) {
        InequalityReport r = check_result2(eig, n);
        CHECK(std::abs(r.lhs) <= 1e-6);
        CHECK(std::abs(r.rhs) <= 1e-9);
        CHECK(r.satisfied);
    }

    const double r0 = 5.0;
    GridState sup02 = synthesize(two_mode_spec(0, 2, 0.5, r0, r0 / 20.0), kGrid);
    InequalityReport r2 = check_result2(sup02, 2);
    CHECK(std::abs(r2.lhs - 1.0) <= 1e-6);          // sigma(L) = hbar at equal weights
    CHECK(std::abs(r2.rhs - 0.5) <= 2e-3);          // (2 hbar/2)|mu_2| -> 1/2
    CHECK(std::abs(r2.ratio - 2.0) <= 0.02);
    oracles::TwoModeRing oracle{r0, r0 / 20.0, 0, 2, 0.5};
    CHECK(std::abs(r2.rhs - oracle.mu_abs(2)) <= 1e-5);

    InequalityReport r1 = check_result2(sup02, 1);
    CHECK(r1.rhs <= 1e-9);  // mu_1 vanishes by the angular selection rule
    CHECK(r1.satisfied);
}

TEST_CASE("result3: eigenstate zeros, strict slack away from eigenstates, oriented dominance") {
    InequalityReport eig = check_result3(ring_state(3), 1);
    CHECK(std::abs(eig.lhs) <= 1e-12);
    CHECK(std::abs(eig.rhs) <= 1e-12);
    CHECK(eig.satisfied);

    for (std::uint64_t seed : {30u, 31u, 32u, 33u}) {
        GridState psi = random_state(kGrid, 1.0, seed);
        for (int n : {1, 2, 3}) {
            InequalityReport r = check_result3(psi, n);
            CHECK(r.slack > 0.0);
            CHECK(r.satisfied);
        }
    }

    // with the heavier weight on the l = 0 component the squared bound is
    // strictly tighter than squared result1
    GridState oriented = synthesize(two_mode_spec(0, 1, 0.7, 5.5, 1.0), kGrid);
    InequalityReport r3 = check_result3(oriented, 1);
    InequalityReport r1 = check_result1(oriented);
    CHECK(r3.slack >= -1e-9);
    CHECK(r3.lhs - r3.rhs < r1.lhs * r1.lhs - r1.rhs * r1.rhs);
    CHECK(r3.rhs > r1.rhs * r1.rhs);

    // two-route identity: rhs equals |<dL Z^n psi>|^2 computed by composition
    GridState psi = random_state(kGrid, 1.0, 99);
    for (int n : {1, 2}) {
        InequalityReport r = check_result3(psi, n);
        Field lpsi = apply_L(psi);
        const double mean_L = std::real(inner(psi, lpsi));
        cplx dlz{0.0, 0.0};
        for (int iy = 0; iy < kGrid.ny; ++iy)
            for (int ix = 0; ix < kGrid.nx; ++ix) {
                const std::size_t k = static_cast<std::size_t>(iy) * kGrid.nx + ix;
                cplx zn{1.0, 0.0};
                for (int q = 0; q < n; ++q) zn *= cplx{kGrid.x(ix), kGrid.y(iy)};
                dlz += std::conj(lpsi.values[k] - mean_L * psi.amplitudes()[k]) * zn *
                       psi.amplitudes()[k];
            }
        dlz *= kGrid.dx() * kGrid.dy();
        CHECK(std::abs(r.rhs - std::norm(dlz)) <= 1e-9);
    }
}

TEST_CASE("result4 on the grid: theorem slack and moment formula") {
    for (std::uint64_t seed : {40u, 41u}) {
        GridState psi = random_state(kGrid, 1.0, seed);
        InequalityReport r = check_result4_grid(psi);
        CHECK(r.satisfied);
        const MomentReport m = position_moment(psi, 1);
        const double formula = std::abs(m.z_moment) / (2.0 * std::sqrt(m.radial_power));
        CHECK(std::abs(r.rhs - formula) <= 1e-8);
    }
}

TEST_CASE("tightness_sweep: monotone approach to 2, weight constancy, eigenstate sentinel") {
    const double r0 = 5.0;
    const std::vector<double> widths{r0 / 5.0, r0 / 10.0, r0 / 15.0, r0 / 20.0,
                                     r0 / 25.0, r0 / 30.0, r0 / 40.0};
    SweepResult sweep = tightness_sweep(
        [&](double w) { return two_mode_spec(0, 1, 0.5, r0, w); }, widths, kGrid);
    REQUIRE(sweep.reports.size() == widths.size());
    for (std::size_t i = 1; i < sweep.reports.size(); ++i)
        CHECK(sweep.reports[i].ratio < sweep.reports[i - 1].ratio);
    CHECK(sweep.min_ratio >= 2.0 - 1e-3);
    CHECK(sweep.reports[3].ratio - 2.0 <= 2e-2);  // width = r0/20 entry

    // both sides scale as sqrt(w(1-w)): the ratio is weight-independent
    std::vector<double> weights{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    SweepResult ws = tightness_sweep(
        [&](double w) { return two_mode_spec(0, 1, w, 5.5, 1.0); }, weights, kGrid);
    double lo = 1e300, hi = 0.0;
    for (const auto& r : ws.reports) {
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
    }
    CHECK(hi - lo <= 1e-6 * lo);
    CHECK(ws.reports[4].ratio <= lo * (1.0 + 1e-9));  // equal weights attain the minimum

    // degenerate family: both sides vanish; 0/0 must not poison the sweep
    SweepResult eig = tightness_sweep(
        [&](double l) { return ModeSpec{RingGauss{int(l), 5.5, 1.0}}; },
        std::vector<double>{1.0, 2.0, 3.0}, kGrid);
    for (const auto& r : eig.reports) {
        CHECK(r.rhs <= 1e-9);
        CHECK(r.lhs <= 1e-5);
        CHECK(r.satisfied);
        CHECK_FALSE(std::isnan(r.ratio));
    }
    CHECK(std::isinf(eig.min_ratio));
}

TEST_CASE("result2 is invariant under spatial dilation") {
    auto reports_for = [](double scale) {
        GridSpec grid{256, 256, 12.0 * scale};
        GridState psi = synthesize(two_mode_spec(0, 1, 0.5, 5.5 * scale, 1.0 * scale), grid);
        return check_result2(psi, 1);
    };
    const InequalityReport a = reports_for(1.0);
    const InequalityReport b = reports_for(2.5);
    CHECK(std::abs(a.lhs - b.lhs) <= 1e-8);
    CHECK(std::abs(a.rhs - b.rhs) <= 1e-8);
}

TEST_CASE("reports are invariant under a quarter-turn rotation") {
    GridState psi = synthesize(two_mode_spec(0, 1, 0.7, 5.5, 1.0), kGrid);
    GridState rot = rotate_quarter(psi);
    for (int variant = 0; variant < 3; ++variant) {
        InequalityReport a, b;
        if (variant == 0) {
            a = check_result1(psi);
            b = check_result1(rot);
        } else if (variant == 1) {
            a = check_result2(psi, 1);
            b = check_result2(rot, 1);
        } else {
            a = check_result3(psi, 1);
            b = check_result3(rot, 1);
        }
        CHECK(std::abs(a.lhs - b.lhs) <= 1e-9);
        CHECK(std::abs(a.rhs - b.rhs) <= 1e-9);
    }
}

TEST_CASE("universal satisfaction over a seeded sample") {
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        GridState psi = random_state(kGrid, 1.0, seed);
        for (const InequalityReport& r : standard_checks(psi)) {
            CAPTURE(seed);
            CAPTURE(r.name);
            CHECK(r.satisfied);
        }
    }
}

TEST_CASE("hbar scaling carries through every report") {
    GridState a = synthesize(two_mode_spec(0, 1, 0.5, 5.5, 1.0), kGrid, 1.0);
    GridState b = synthesize(two_mode_spec(0, 1, 0.5, 5.5, 1.0), kGrid, 0.5);
    const InequalityReport ra = check_result2(a, 1);
    const InequalityReport rb = check_result2(b, 1);
    CHECK(std::abs(rb.lhs - 0.5 * ra.lhs) <= 1e-9);
    CHECK(std::abs(rb.rhs - 0.5 * ra.rhs) <= 1e-9);
    CHECK(std::abs(check_robertson(b, PairAxis::XPx).rhs - 0.25) <= 1e-15);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oamkit/grid.hpp"
#include "oamkit/modes.hpp"
#include "oamkit/operators.hpp"
#include "oamkit/random_field.hpp"

using namespace oamkit;

namespace {
const GridSpec kGrid{256, 256, 12.0};
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("isotropic RingGauss peaks at the origin") {
    GridState psi = synthesize(ModeSpec{RingGauss{0, 0.0, 1.0}}, kGrid);
    double peak = 0.0;
    for (const cplx& a : psi.amplitudes()) peak = std::max(peak, std::abs(a));
    CHECK(std::abs(psi.at(128, 128)) == doctest::Approx(peak));
}

TEST_CASE("RingGauss winding: phase increments around the ring sum to 2 pi l") {
    GridState psi = synthesize(ModeSpec{RingGauss{3, 5.5, 1.0}}, kGrid);
    const int samples = 720;
    double total = 0.0;
    double prev = 0.0;
    for (int s = 0; s <= samples; ++s) {
        const double th = 2.0 * kPi * s / samples;
        const int ix = 128 + static_cast<int>(std::lround(5.5 * std::cos(th) / kGrid.dx()));
        const int iy = 128 + static_cast<int>(std::lround(5.5 * std::sin(th) / kGrid.dy()));
        const double ph = std::arg(psi.at(ix, iy));
        if (s > 0) {
            double d = ph - prev;
            while (d > kPi) d -= 2.0 * kPi;
            while (d < -kPi) d += 2.0 * kPi;
            total += d;
        }
        prev = ph;
    }
    CHECK(std::abs(total - 6.0 * kPi) <= 1e-3);
}

TEST_CASE("two-mode ring interference: bright and dark directions") {
    Superposition sup;
    sup.terms.emplace_back(cplx{1.0 / std::numbers::sqrt2, 0.0}, ModeSpec{RingGauss{0, 5.5, 1.0}});
    sup.terms.emplace_back(cplx{1.0 / std::numbers::sqrt2, 0.0}, ModeSpec{RingGauss{1, 5.5, 1.0}});
    GridState psi = synthesize(ModeSpec{sup}, kGrid);
    const int off = static_cast<int>(std::lround(5.5 / kGrid.dx()));
    const double bright = std::norm(psi.at(128 + off, 128));
    const double dark = std::norm(psi.at(128 - off, 128));
    CHECK(bright > 1e3 * dark);
}

TEST_CASE("synthesis guards") {
    CHECK_THROWS_AS(synthesize(ModeSpec{RingGauss{1, 9.0, 1.0}}, kGrid), FeatureExceedsGrid);
    CHECK_THROWS_AS(synthesize(ModeSpec{OffsetGauss{0.0, 0.0, 6.0}}, kGrid), FeatureExceedsGrid);
    CHECK_THROWS_AS(synthesize(ModeSpec{Superposition{}}, kGrid), EmptySuperposition);
    CHECK_THROWS_AS(synthesize(ModeSpec{RingGauss{1, 5.5, -1.0}}, kGrid), GridError);
}

TEST_CASE("LaguerreGauss p=1 has one radial node") {
    GridState psi = synthesize(ModeSpec{LaguerreGauss{1, 1, 2.2}}, kGrid);
    // scan |psi| along +x: it rises, dips through the L_1 node, rises again
    int sign_changes = 0;
    double prev = std::abs(psi.at(129, 128));
    bool increasing = true;
    for (int ix = 130; ix < 250; ++ix) {
        const double cur = std::abs(psi.at(ix, 128));
        if (increasing && cur < prev - 1e-12) {
            increasing = false;
            ++sign_changes;
        } else if (!increasing && cur > prev + 1e-12) {
            increasing = true;
            ++sign_changes;
        }
        prev = cur;
    }
    CHECK(sign_changes >= 2);  // node between the two annuli
    // vortex core: amplitude vanishes at the origin for l != 0
    CHECK(std::abs(psi.at(128, 128)) <= 1e-12);
}

TEST_CASE("Parseval under the unitary transform convention") {
    GridState psi = synthesize(ModeSpec{LaguerreGauss{1, 1, 2.2}}, kGrid);
    MomentumRep rep = momentum_representation(psi);
    double ksum = 0.0;
    for (const cplx& a : rep.amps) ksum += std::norm(a);
    ksum *= rep.dkx * rep.dky;
    CHECK(std::abs(ksum - 1.0) <= 1e-10);
}

TEST_CASE("moments of a superposition are sesquilinear in the weights") {
    GridState s0 = synthesize(ModeSpec{RingGauss{0, 5.5, 1.0}}, kGrid);
    GridState s1 = synthesize(ModeSpec{RingGauss{1, 5.5, 1.0}}, kGrid);
    GaussianRng rng(123);
    for (int trial = 0; trial < 3; ++trial) {
        const cplx wa{rng.next(), rng.next()};
        const cplx wb{rng.next(), rng.next()};
        GridState sup = superpose(std::vector<GridState>{s0, s1}, std::vector<cplx>{wa, wb});

        // assemble <Z> from pairwise matrix elements of the raw combination
        auto cross = [&](const GridState& a, const GridState& b) {
            cplx acc{0.0, 0.0};
            for (int iy = 0; iy < kGrid.ny; ++iy)
                for (int ix = 0; ix < kGrid.nx; ++ix) {
                    const cplx z{kGrid.x(ix), kGrid.y(iy)};
                    acc += std::conj(a.at(ix, iy)) * z * b.at(ix, iy);
                }
            return acc * kGrid.dx() * kGrid.dy();
        };
        const double n2 = std::norm(wa) + std::norm(wb);  // components orthonormal
        const cplx expected = (std::norm(wa) * cross(s0, s0) + std::norm(wb) * cross(s1, s1) +
                               std::conj(wa) * wb * cross(s0, s1) +
                               std::conj(wb) * wa * cross(s1, s0)) /
                              n2;
        const cplx got = position_moment(sup, 1).z_moment;
        CHECK(std::abs(got - expected) <= 1e-9);
    }
}

TEST_CASE("moment rotation covariance under a quarter turn") {
    Superposition sup;
    sup.terms.emplace_back(cplx{std::sqrt(0.7), 0.0}, ModeSpec{RingGauss{0, 5.5, 1.0}});
    sup.terms.emplace_back(cplx{std::sqrt(0.3), 0.0}, ModeSpec{RingGauss{1, 5.5, 1.0}});
    GridState psi = synthesize(ModeSpec{sup}, kGrid);
    GridState rot = rotate_quarter(psi);
    for (int n = 1; n <= 3; ++n) {
        const MomentReport a = position_moment(psi, n);
        const MomentReport b = position_moment(rot, n);
        const cplx phase = std::polar(1.0, n * kPi / 2.0);
        CHECK(std::abs(b.z_moment - phase * a.z_moment) <= 1e-9);
        CHECK(std::abs(b.radial_power - a.radial_power) <= 1e-9);
    }
    CHECK(std::abs(oam_statistics(rot).sigma_L - oam_statistics(psi).sigma_L) <= 1e-9);
}

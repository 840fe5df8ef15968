#include "oamkit/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oamkit {

namespace {

ModeSpec ring_mode(int l, const RingGeometry& geom) {
    return ModeSpec{RingGauss{l, geom.r0, geom.width}};
}

ModeSpec two_ring_superposition(int l1, int l2, double weight, const RingGeometry& geom) {
    Superposition sup;
    sup.terms.emplace_back(cplx{std::sqrt(weight), 0.0}, ring_mode(l1, geom));
    sup.terms.emplace_back(cplx{std::sqrt(1.0 - weight), 0.0}, ring_mode(l2, geom));
    return ModeSpec{std::move(sup)};
}

ScenarioResult base_result(std::string name, const GridState& state, int bins) {
    ScenarioResult r;
    r.scenario = std::move(name);
    r.oam = oam_statistics(state);
    for (int n = 1; n <= 4; ++n) r.moments.push_back(position_moment(state, n));
    r.inequalities = standard_checks(state);
    r.bins = bins;
    r.histogram = angular_histogram(state, bins);
    r.decay_guard_ok = state.decay_guard_ok();
    return r;
}

bool all_satisfied(const std::vector<InequalityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const InequalityReport& r) { return r.satisfied; });
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

ScenarioResult eigenstate_scenario(int l, RingGeometry geom, const GridSpec& grid, double hbar) {
    const ModeSpec mode = (l == 0 && geom.r0 == 0.0)
                              ? ModeSpec{OffsetGauss{0.0, 0.0, geom.width}}
                              : ring_mode(l, geom);
    GridState state = synthesize(mode, grid, hbar);
    ScenarioResult r = base_result("eigenstate", state, 64);
    r.parameters = {{"l", double(l)}, {"r0", geom.r0}, {"width", geom.width}, {"hbar", hbar}};

    double max_mu = 0.0;
    for (const MomentReport& m : r.moments) max_mu = std::max(max_mu, std::abs(m.mu_n));
    double flat = 0.0;
    for (double p : r.histogram) flat = std::max(flat, std::abs(p - 1.0 / r.bins));

    const bool ok = r.oam.sigma_L <= 1e-6 * hbar && max_mu <= 1e-9 && flat <= 1e-6 &&
                    all_satisfied(r.inequalities);
    r.verdict_pass = ok;
    std::ostringstream v;
    v << (ok ? "PASS" : "FAIL") << ": eigenstate l=" << l << ": mean_L=" << r.oam.mean_L
      << ", sigma_L=" << fmt(r.oam.sigma_L) << " (<=1e-6), max|mu_n|=" << fmt(max_mu)
      << " (<=1e-9), histogram flat to " << fmt(flat) << " (<=1e-6), inequalities "
      << (all_satisfied(r.inequalities) ? "all satisfied" : "VIOLATED");
    r.verdict = v.str();
    return r;
}

ScenarioResult superposition_scenario(int l1, int l2, double weight, RingGeometry geom,
                                      const GridSpec& grid, double hbar) {
    if (l1 == l2) throw GridError("superposition_scenario: l1 and l2 must differ");
    if (!(weight > 0.0 && weight < 1.0))
        throw GridError("superposition_scenario: weight must lie in (0,1)");
    GridState state = synthesize(two_ring_superposition(l1, l2, weight, geom), grid, hbar);
    ScenarioResult r = base_result("superposition", state, 64);
    r.parameters = {{"l1", double(l1)}, {"l2", double(l2)}, {"weight", weight},
                    {"r0", geom.r0},   {"width", geom.width}, {"hbar", hbar}};

    const int dl = std::abs(l1 - l2);
    const double sigma_expected = std::sqrt(weight * (1.0 - weight)) * dl * hbar;
    const double sigma_err = std::abs(r.oam.sigma_L - sigma_expected);
    const double mu_dl = (dl >= 1 && dl <= 4) ? std::abs(r.moments[dl - 1].mu_n) : 0.0;

    // lobes: sign changes of the centered histogram, ignoring ripple below
    // 1e-3 of the peak deviation
    double mean = 0.0;
    for (double p : r.histogram) mean += p;
    mean /= r.bins;
    double peak = 0.0;
    for (double p : r.histogram) peak = std::max(peak, std::abs(p - mean));
    int lobes = 0;
    int prev = 0;
    int first = 0;
    for (double p : r.histogram) {
        const double d = p - mean;
        if (std::abs(d) < 1e-3 * peak) continue;
        const int s = d > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++lobes;
        if (prev == 0) first = s;
        prev = s;
    }
    if (prev != 0 && first != 0 && prev != first) ++lobes;  // wraparound
    lobes /= 2;

    const bool ok = sigma_err <= 1e-7 && mu_dl > 0.0 && lobes == dl &&
                    all_satisfied(r.inequalities);
    r.verdict_pass = ok;
    std::ostringstream v;
    v << (ok ? "PASS" : "FAIL") << ": superposition l=" << l1 << "+" << l2 << " w=" << weight
      << ": sigma_L=" << r.oam.sigma_L << " (expected " << sigma_expected << ", err "
      << fmt(sigma_err) << "), |mu_" << dl << "|=" << mu_dl << ", lobes=" << lobes
      << " (expected " << dl << "), inequalities "
      << (all_satisfied(r.inequalities) ? "all satisfied" : "VIOLATED");
    r.verdict = v.str();
    return r;
}

std::vector<TradeoffRow> tradeoff_table(int l1, int l2, std::span<const double> weights,
                                        RingGeometry geom, const GridSpec& grid, double hbar) {
    if (l1 == l2) throw GridError("tradeoff_table: l1 and l2 must differ");
    const int dl = std::min(std::abs(l1 - l2), kMaxMomentOrder);
    std::vector<TradeoffRow> rows;
    rows.reserve(weights.size());
    for (double w : weights) {
        GridState state = synthesize(two_ring_superposition(l1, l2, w, geom), grid, hbar);
        TradeoffRow row;
        row.weight = w;
        row.sigma_L = oam_statistics(state).sigma_L;
        for (int n = 1; n <= 4; ++n) row.mu_abs[n - 1] = std::abs(position_moment(state, n).mu_n);
        const InequalityReport r2 = check_result2(state, dl);
        row.result2_slack = r2.slack;
        row.result2_ratio = r2.ratio;
        row.satisfied = r2.satisfied;
        rows.push_back(row);
    }
    return rows;
}

const std::vector<ShippedMode>& shipped_modes() {
    static const std::vector<ShippedMode> gallery = [] {
        const GridSpec g{256, 256, 12.0};
        std::vector<ShippedMode> v;
        v.push_back({"gauss_iso", ModeSpec{OffsetGauss{0.0, 0.0, 1.5}}, g});
        v.push_back({"gauss_offset", ModeSpec{OffsetGauss{2.0, -1.0, 1.4}}, g});
        v.push_back({"ring_l0", ModeSpec{RingGauss{0, 4.5, 1.0}}, g});
        v.push_back({"ring_l3", ModeSpec{RingGauss{3, 5.5, 1.0}}, g});
        v.push_back({"ring_lm2", ModeSpec{RingGauss{-2, 5.5, 1.0}}, g});
        v.push_back({"lg_p0_l1", ModeSpec{LaguerreGauss{0, 1, 2.0}}, g});
        v.push_back({"lg_p1_l1", ModeSpec{LaguerreGauss{1, 1, 2.2}}, g});

        const RingGeometry geom{5.5, 1.0};
        v.push_back({"sup_01_equal", two_ring_superposition(0, 1, 0.5, geom), g});
        v.push_back({"sup_03_equal", two_ring_superposition(0, 3, 0.5, geom), g});
        v.push_back({"sup_01_w07", two_ring_superposition(0, 1, 0.7, geom), g});
        return v;
    }();
    return gallery;
}

}  // namespace oamkit

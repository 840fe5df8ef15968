#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "oamkit/grid.hpp"
#include "oamkit/inequality.hpp"
#include "oamkit/modes.hpp"
#include "oamkit/operators.hpp"

namespace oamkit {

struct RingGeometry {
    double r0 = 5.5;
    double width = 1.0;
};

struct ScenarioResult {
    std::string scenario;
    std::map<std::string, double> parameters;
    OamReport oam;
    std::vector<MomentReport> moments;          // n = 1..4
    std::vector<InequalityReport> inequalities; // standard_checks set
    std::vector<double> histogram;              // angular marginal
    int bins = 64;
    bool decay_guard_ok = true;
    bool verdict_pass = false;
    std::string verdict;
};

// Rotation eigenstate: flat angular marginal, vanishing moments, sharp L.
ScenarioResult eigenstate_scenario(int l, RingGeometry geom, const GridSpec& grid,
                                   double hbar = 1.0);

// Two-winding superposition with occupation `weight` on l1: sigma(L) =
// sqrt(w(1-w)) |l1-l2| hbar, a single nonvanishing moment order |l1-l2|, and
// an |l1-l2|-lobed angular marginal.
ScenarioResult superposition_scenario(int l1, int l2, double weight, RingGeometry geom,
                                      const GridSpec& grid, double hbar = 1.0);

struct TradeoffRow {
    double weight = 0.0;
    double sigma_L = 0.0;
    std::array<double, 4> mu_abs{};  // |mu_1| .. |mu_4|
    double result2_slack = 0.0;      // at n = |l1 - l2|
    double result2_ratio = 0.0;
    bool satisfied = true;
};

std::vector<TradeoffRow> tradeoff_table(int l1, int l2, std::span<const double> weights,
                                        RingGeometry geom, const GridSpec& grid,
                                        double hbar = 1.0);

// Fixed gallery used by regression checks and the self test. All entries pass
// the decay guard and the spectral accuracy targets on their stated grid.
struct ShippedMode {
    std::string name;
    ModeSpec mode;
    GridSpec grid;
};

const std::vector<ShippedMode>& shipped_modes();

}  // namespace oamkit

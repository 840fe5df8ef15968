// oamkit: analyze planar wavefunctions, check the angular-momentum/
// order-parameter uncertainty inequalities, and run scripted scenarios.
//
// Exit codes: 0 = success and every checked inequality satisfied;
//             1 = an inequality, guard, or self-test property failed;
//             2 = usage, parse, or input-file error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "oamkit/fock.hpp"
#include "oamkit/inequality.hpp"
#include "oamkit/modes.hpp"
#include "oamkit/operators.hpp"
#include "oamkit/random_field.hpp"
#include "oamkit/reports_io.hpp"
#include "oamkit/scenarios.hpp"
#include "oamkit/state_io.hpp"

namespace fs = std::filesystem;
using namespace oamkit;

namespace {

struct CommonOpts {
    int grid_n = 256;
    double extent = 12.0;
    double hbar = 1.0;
    double tol = kSlackTol;
    int n_max_moment = 3;
    std::string format = "json";
    std::string out_dir = ".";
};

struct ModeOpts {
    std::string mode;  // ring | lg | gauss | superposition
    int l = 0;
    int p = 0;
    int l1 = 0;
    int l2 = 1;
    double weight = 0.5;
    double r0 = 5.5;
    double width = 1.0;
    double x0 = 0.0;
    double y0 = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--grid-n", o.grid_n, "Samples per axis (even, >= 16)")
        ->check(CLI::Range(16, 1 << 15));
    cmd->add_option("--extent", o.extent, "Grid half extent L; grid spans [-L, L)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--hbar", o.hbar, "Action scale hbar (natural units by default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tol, "Slack tolerance for the satisfied flag")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n-max-moment", o.n_max_moment, "Highest moment order checked (<= 8)")
        ->check(CLI::Range(1, kMaxMomentOrder));
    cmd->add_option("--format", o.format, "Report format: json (default) adds csv tables when 'csv'")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out-dir", o.out_dir, "Directory for report files");
}

void add_mode(CLI::App* cmd, ModeOpts& o) {
    cmd->add_option("--mode", o.mode, "State family: ring | lg | gauss | superposition");
    cmd->add_option("--l", o.l, "Winding number (ring, lg)");
    cmd->add_option("--p", o.p, "Radial index (lg)");
    cmd->add_option("--l1", o.l1, "First winding (superposition)");
    cmd->add_option("--l2", o.l2, "Second winding (superposition)");
    cmd->add_option("--weight", o.weight, "Occupation of the l1 component, in (0,1)");
    cmd->add_option("--r0", o.r0, "Ring radius");
    cmd->add_option("--width", o.width, "Radial width (ring, superposition) or waist (lg, gauss)");
    cmd->add_option("--x0", o.x0, "Gaussian center x");
    cmd->add_option("--y0", o.y0, "Gaussian center y");
}

ModeSpec build_mode(const ModeOpts& o) {
    if (o.mode == "ring") return ModeSpec{RingGauss{o.l, o.r0, o.width}};
    if (o.mode == "lg") return ModeSpec{LaguerreGauss{o.p, o.l, o.width}};
    if (o.mode == "gauss") return ModeSpec{OffsetGauss{o.x0, o.y0, o.width}};
    if (o.mode == "superposition") {
        Superposition sup;
        sup.terms.emplace_back(cplx{std::sqrt(o.weight), 0.0},
                               ModeSpec{RingGauss{o.l1, o.r0, o.width}});
        sup.terms.emplace_back(cplx{std::sqrt(1.0 - o.weight), 0.0},
                               ModeSpec{RingGauss{o.l2, o.r0, o.width}});
        return ModeSpec{std::move(sup)};
    }
    throw CLI::ValidationError("--mode", "unknown mode '" + o.mode +
                                             "' (expected ring, lg, gauss, superposition)");
}

int run_analyze(const CommonOpts& c, const ModeOpts& m, const std::string& state_file,
                const std::string& save_state_path) {
    GridState state = [&] {
        if (!state_file.empty()) return load_state(state_file);
        if (m.mode.empty())
            throw CLI::ValidationError("analyze", "either --state or --mode is required");
        return synthesize(build_mode(m), GridSpec{c.grid_n, c.grid_n, c.extent}, c.hbar);
    }();

    fs::create_directories(c.out_dir);
    if (!save_state_path.empty()) save_state(save_state_path, state);

    std::vector<std::string> warnings;
    if (!state.decay_guard_ok()) warnings.push_back("DecayGuardViolated");

    const OamReport oam = oam_statistics(state);
    std::vector<MomentReport> moments;
    for (int n = 1; n <= std::max(4, c.n_max_moment); ++n)
        moments.push_back(position_moment(state, n));
    std::vector<CovarianceReport> covariance;
    for (int n = 1; n <= c.n_max_moment; ++n) covariance.push_back(covariance_terms(state, n));
    const auto inequalities = standard_checks(state, c.n_max_moment, c.tol);
    const bool all_ok = std::all_of(inequalities.begin(), inequalities.end(),
                                    [](const InequalityReport& r) { return r.satisfied; });

    json report;
    report["state"] = {{"source", state_file.empty() ? "mode:" + m.mode : "file:" + state_file},
                       {"nx", state.grid().nx},
                       {"ny", state.grid().ny},
                       {"half_extent", state.grid().half_extent},
                       {"hbar", state.hbar()},
                       {"norm", state.norm()}};
    report["warnings"] = warnings;
    report["oam"] = to_json(oam);
    auto jm = json::array();
    for (const auto& r : moments) jm.push_back(to_json(r));
    report["moments"] = std::move(jm);
    auto jc = json::array();
    for (const auto& r : covariance) jc.push_back(to_json(r));
    report["covariance"] = std::move(jc);
    auto ji = json::array();
    for (const auto& r : inequalities) ji.push_back(to_json(r));
    report["inequalities"] = std::move(ji);
    report["all_satisfied"] = all_ok;

    const fs::path out(c.out_dir);
    write_text_file(out / "report.json", report.dump(2) + "\n");
    if (c.format == "csv") {
        write_text_file(out / "inequalities.csv", inequality_csv(inequalities));
        write_text_file(out / "histogram.csv", histogram_csv(angular_histogram(state, 64)));
    }

    std::cout << "analyze: " << (all_ok ? "all inequalities satisfied" : "VIOLATION detected")
              << (warnings.empty() ? "" : " [DecayGuardViolated]") << "; report in "
              << (out / "report.json").string() << "\n";
    return (all_ok && warnings.empty()) ? 0 : 1;
}

std::vector<double> parse_sweep(const std::string& sweep) {
    // start:end:count
    double start = 0, end = 0;
    int count = 0;
    if (std::sscanf(sweep.c_str(), "%lf:%lf:%d", &start, &end, &count) != 3 || count < 1)
        throw CLI::ValidationError("--sweep", "expected START:END:COUNT");
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(count == 1 ? start : start + (end - start) * i / (count - 1));
    return out;
}

int run_scenario(const std::string& name, const CommonOpts& c, const ModeOpts& m,
                 const std::string& sweep) {
    const GridSpec grid{c.grid_n, c.grid_n, c.extent};
    const RingGeometry geom{m.r0, m.width};
    fs::create_directories(c.out_dir);
    const fs::path out(c.out_dir);

    if (name == "eigenstate") {
        ScenarioResult r = eigenstate_scenario(m.l, geom, grid, c.hbar);
        write_text_file(out / "scenario_eigenstate.json", to_json(r).dump(2) + "\n");
        write_text_file(out / "histogram.csv", histogram_csv(r.histogram));
        std::cout << r.verdict << "\n";
        return r.verdict_pass ? 0 : 1;
    }
    if (name == "superposition") {
        if (!sweep.empty()) {
            const auto weights = parse_sweep(sweep);
            const auto rows = tradeoff_table(m.l1, m.l2, weights, geom, grid, c.hbar);
            write_text_file(out / "tradeoff.csv", tradeoff_csv(rows));
            const bool ok = std::all_of(rows.begin(), rows.end(),
                                        [](const TradeoffRow& r) { return r.satisfied; });
            std::cout << "tradeoff table: " << rows.size() << " rows, "
                      << (ok ? "all satisfied" : "VIOLATION") << "; csv in "
                      << (out / "tradeoff.csv").string() << "\n";
            return ok ? 0 : 1;
        }
        ScenarioResult r = superposition_scenario(m.l1, m.l2, m.weight, geom, grid, c.hbar);
        write_text_file(out / "scenario_superposition.json", to_json(r).dump(2) + "\n");
        write_text_file(out / "histogram.csv", histogram_csv(r.histogram));
        std::cout << r.verdict << "\n";
        return r.verdict_pass ? 0 : 1;
    }
    std::cerr << "unknown scenario '" << name << "'; valid names: eigenstate, superposition\n";
    return 2;
}

struct PropertyOutcome {
    std::string name;
    bool pass = true;
    double worst = 0.0;  // worst slack or residual margin
    std::string detail;
};

int run_selftest(std::uint64_t seed, bool quick, const std::string& inject_fault) {
    std::vector<PropertyOutcome> outcomes;

    // 1. commutator identity on the shipped gallery; worst = largest residual
    // as a fraction of its bound 1e-6 sqrt<(Z^dag Z)^n>
    {
        PropertyOutcome o{"commutator_identity", true, 0.0, ""};
        for (const ShippedMode& sm : shipped_modes()) {
            GridState st = synthesize(sm.mode, sm.grid, 1.0);
            for (int n = 1; n <= 3; ++n) {
                cplx res = commutator_residual(st, n);
                if (inject_fault == "sign-flip-commutator") {
                    // test-only mutation: emulate [L, Z^n] = -n hbar Z^n
                    res += 2.0 * double(n) * st.hbar() * position_moment(st, n).z_moment;
                }
                const double bound = 1e-6 * std::sqrt(position_moment(st, n).radial_power);
                const double fraction = std::abs(res) / bound;
                o.worst = std::max(o.worst, fraction);
                if (fraction > 1.0) {
                    o.pass = false;
                    o.detail = sm.name + " n=" + std::to_string(n);
                }
            }
        }
        outcomes.push_back(o);
    }

    // 2. theorem regression over seeded random states
    {
        PropertyOutcome o{"random_state_inequalities", true, 1e300, ""};
        const int count = quick ? 100 : 1000;
        const GridSpec grid{256, 256, 12.0};
        for (int s = 0; s < count; ++s) {
            GridState st = random_state(grid, 1.0, seed + s);
            for (const InequalityReport& r : standard_checks(st)) {
                o.worst = std::min(o.worst, r.slack);
                if (!r.satisfied) {
                    o.pass = false;
                    o.detail = r.name + " seed=" + std::to_string(seed + s);
                }
            }
        }
        outcomes.push_back(o);
    }

    // 3. generalized relation over random matrix triples
    {
        PropertyOutcome o{"fock_random_pairs", true, 1e300, ""};
        const std::vector<int> dims = quick ? std::vector<int>{2, 8, 64}
                                            : std::vector<int>{2, 3, 5, 8, 16, 32, 64};
        const int per_dim = (quick ? 100 : 1000) / static_cast<int>(dims.size());
        for (int d : dims) {
            for (const GeneralizedReport& r : random_pair_property(seed + d, d, per_dim)) {
                o.worst = std::min(o.worst, r.slack);
                if (!r.satisfied) {
                    o.pass = false;
                    o.detail = "dim=" + std::to_string(d);
                }
            }
        }
        outcomes.push_back(o);
    }

    // 4. grid-convergence spot check
    {
        PropertyOutcome o{"grid_convergence", true, 0.0, ""};
        const ModeSpec mode{RingGauss{3, 5.5, 1.0}};
        GridState a = synthesize(mode, GridSpec{256, 256, 12.0}, 1.0);
        GridState b = synthesize(mode, GridSpec{512, 512, 12.0}, 1.0);
        const OamReport oa = oam_statistics(a), ob = oam_statistics(b);
        const MomentReport ma = position_moment(a, 2), mb = position_moment(b, 2);
        auto rel = [](double x, double y) {
            return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1.0});
        };
        const double worst = std::max({rel(oa.mean_L, ob.mean_L), rel(oa.var_L, ob.var_L),
                                       rel(ma.radial_power, mb.radial_power)});
        o.worst = 1e-8 - worst;
        o.pass = worst <= 1e-8;
        outcomes.push_back(o);
    }

    const char* gauge[] = {"residual/bound", "min slack", "min slack", "margin to 1e-8"};
    bool all_pass = true;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const PropertyOutcome& o = outcomes[i];
        all_pass = all_pass && o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << o.name << "  " << gauge[i] << " = "
                  << format_double(o.worst) << (o.detail.empty() ? "" : "  at " + o.detail)
                  << "\n";
    }
    std::cout << (all_pass ? "selftest: all properties hold\n" : "selftest: VIOLATIONS found\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oamkit: angular-momentum / angular-order-parameter uncertainty toolkit.\n"
                 "Exit codes: 0 = pass, 1 = inequality/guard/property violation, 2 = usage error.\n"
                 "A DecayGuardViolated warning appears in report.json and forces exit 1."};
    app.require_subcommand(1);

    CommonOpts copts;
    ModeOpts mopts;
    std::string state_file, save_state_path, sweep, scenario_name;
    std::uint64_t seed = 20150406;
    bool quick = false;
    std::string inject_fault;

    CLI::App* analyze = app.add_subcommand("analyze", "Full report for one state");
    add_common(analyze, copts);
    add_mode(analyze, mopts);
    analyze->add_option("--state", state_file, "Load a saved state file instead of --mode");
    analyze->add_option("--save-state", save_state_path, "Also save the analyzed state");

    CLI::App* scenario = app.add_subcommand("scenario", "Scripted desk-scale experiments");
    scenario->add_option("name", scenario_name, "eigenstate | superposition")->required();
    add_common(scenario, copts);
    add_mode(scenario, mopts);
    scenario->add_option("--sweep", sweep, "Weight sweep START:END:COUNT (superposition)");

    CLI::App* selftest = app.add_subcommand("selftest", "Property suite over seeded ensembles");
    selftest->add_option("--seed", seed, "Base seed for the random ensembles");
    selftest->add_flag("--quick", quick, "100 random states instead of 1000");
    selftest->add_option("--inject-fault", inject_fault, "")->group("");  // test-only mutation hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(copts, mopts, state_file, save_state_path);
        if (scenario->parsed()) return run_scenario(scenario_name, copts, mopts, sweep);
        if (selftest->parsed()) return run_selftest(seed, quick, inject_fault);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StateIoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GridError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

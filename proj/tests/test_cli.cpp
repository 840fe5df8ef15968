#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

#ifndef OAMKIT_CLI
#error "OAMKIT_CLI must point at the CLI binary"
#endif

int run(const std::string& args) {
    const std::string cmd = std::string(OAMKIT_CLI) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path fresh_dir(const char* name) {
    fs::path d = fs::temp_directory_path() / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("analyze: eigenstate report, exit 0, csv emission") {
    const fs::path out = fresh_dir("oamkit_cli_analyze");
    CHECK(run("analyze --mode ring --l 2 --r0 5 --width 1 --format csv --out-dir " +
              out.string()) == 0);
    CHECK(fs::exists(out / "report.json"));
    CHECK(fs::exists(out / "inequalities.csv"));
    CHECK(fs::exists(out / "histogram.csv"));
    const std::string report = slurp(out / "report.json");
    CHECK(report.find("\"all_satisfied\": true") != std::string::npos);
    CHECK(report.find("\"mean_L\"") != std::string::npos);
}

TEST_CASE("analyze: state-file round trip reproduces the report byte for byte") {
    const fs::path out1 = fresh_dir("oamkit_cli_rt1");
    const fs::path out2 = fresh_dir("oamkit_cli_rt2");
    const fs::path wf = out1 / "state.wf";
    CHECK(run("analyze --mode superposition --l1 0 --l2 1 --weight 0.5 --r0 5.5 --width 1 "
              "--save-state " + wf.string() + " --out-dir " + out1.string()) == 0);
    CHECK(run("analyze --state " + wf.string() + " --out-dir " + out2.string()) == 0);
    const std::string a = slurp(out1 / "report.json");
    const std::string b = slurp(out2 / "report.json");
    // identical except for the recorded source line
    auto strip_source = [](std::string s) {
        const auto pos = s.find("\"source\"");
        const auto end = s.find('\n', pos);
        return s.erase(pos, end - pos);
    };
    CHECK(strip_source(a) == strip_source(b));
}

TEST_CASE("determinism: repeated identical invocations emit identical bytes") {
    const fs::path out1 = fresh_dir("oamkit_cli_det1");
    const fs::path out2 = fresh_dir("oamkit_cli_det2");
    const std::string flags = "analyze --mode lg --p 1 --l 1 --width 2.2 --format csv --out-dir ";
    CHECK(run(flags + out1.string()) == 0);
    CHECK(run(flags + out2.string()) == 0);
    CHECK(slurp(out1 / "report.json") == slurp(out2 / "report.json"));
    CHECK(slurp(out1 / "inequalities.csv") == slurp(out2 / "inequalities.csv"));
    CHECK(slurp(out1 / "histogram.csv") == slurp(out2 / "histogram.csv"));
}

TEST_CASE("analyze: malformed state file exits 2 and writes nothing") {
    const fs::path out = fresh_dir("oamkit_cli_bad");
    const fs::path bad = out / "bad.wf";
    {
        std::ofstream f(bad, std::ios::binary);
        f << "OAMWF01\ntruncated";
    }
    const fs::path report_dir = out / "reports";
    CHECK(run("analyze --state " + bad.string() + " --out-dir " + report_dir.string()) == 2);
    CHECK_FALSE(fs::exists(report_dir / "report.json"));
}

TEST_CASE("scenario: eigenstate files and flat histogram csv") {
    const fs::path out = fresh_dir("oamkit_cli_scen");
    CHECK(run("scenario eigenstate --l 4 --r0 5.5 --width 0.8 --out-dir " + out.string()) == 0);
    CHECK(fs::exists(out / "scenario_eigenstate.json"));
    const std::string csv = slurp(out / "histogram.csv");
    CHECK(csv.rfind("bin_center,probability", 0) == 0);
    // 64 bins + header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);
}

TEST_CASE("scenario: sweep emits one row per weight") {
    const fs::path out = fresh_dir("oamkit_cli_sweep");
    CHECK(run("scenario superposition --l1 0 --l2 1 --r0 5 --width 0.25 --sweep 0.1:0.9:9 "
              "--out-dir " + out.string()) == 0);
    const std::string csv = slurp(out / "tradeoff.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);  // header + 9 rows
}

TEST_CASE("scenario: unknown name exits 2") {
    CHECK(run("scenario doesnotexist") == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("analyze --mode nosuchmode") == 2);
    CHECK(run("analyze") == 2);
    CHECK(run("--bogus-flag") == 2);
}

TEST_CASE("selftest: quick run passes, injected fault trips it") {
    CHECK(run("selftest --quick") == 0);
    CHECK(run("selftest --quick --inject-fault sign-flip-commutator") == 1);
}

#include "oamkit/reports_io.hpp"

#include "oamkit/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace oamkit {

namespace {

json complex_json(const cplx& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json ratio_json(double ratio) {
    if (!std::isfinite(ratio)) return nullptr;
    return ratio;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json to_json(const OamReport& r) {
    return json{{"mean_L", r.mean_L}, {"var_L", r.var_L}, {"sigma_L", r.sigma_L}};
}

json to_json(const MomentReport& r) {
    return json{{"n", r.n},
                {"z_moment", complex_json(r.z_moment)},
                {"radial_power", r.radial_power},
                {"mu_n", complex_json(r.mu_n)}};
}

json to_json(const CovarianceReport& r) {
    return json{{"n", r.n},
                {"cs_L_xn", r.cs_L_xn},
                {"cs_L_yn", r.cs_L_yn},
                {"mean_xn", r.mean_xn},
                {"mean_yn", r.mean_yn}};
}

json to_json(const InequalityReport& r) {
    return json{{"name", r.name},   {"n", r.n},         {"lhs", r.lhs},
                {"rhs", r.rhs},     {"slack", r.slack}, {"ratio", ratio_json(r.ratio)},
                {"satisfied", r.satisfied}};
}

json to_json(const GeneralizedReport& r) {
    return json{{"sigma_G", r.sigma_G}, {"comm_abs", r.comm_abs}, {"denom", r.denom},
                {"lhs", r.lhs},         {"rhs", r.rhs},           {"slack", r.slack},
                {"satisfied", r.satisfied}};
}

json to_json(const ScenarioResult& r) {
    json j;
    j["scenario"] = r.scenario;
    j["parameters"] = r.parameters;
    j["oam"] = to_json(r.oam);
    auto moments = json::array();
    for (const auto& m : r.moments) moments.push_back(to_json(m));
    j["moments"] = std::move(moments);
    auto ineq = json::array();
    for (const auto& i : r.inequalities) ineq.push_back(to_json(i));
    j["inequalities"] = std::move(ineq);
    j["bins"] = r.bins;
    j["histogram"] = r.histogram;
    j["decay_guard_ok"] = r.decay_guard_ok;
    j["verdict_pass"] = r.verdict_pass;
    j["verdict"] = r.verdict;
    return j;
}

std::string inequality_csv(std::span<const InequalityReport> reports) {
    std::ostringstream os;
    os << "name,n,lhs,rhs,slack,ratio,satisfied\n";
    for (const auto& r : reports) {
        os << r.name << ',' << r.n << ',' << format_double(r.lhs) << ',' << format_double(r.rhs)
           << ',' << format_double(r.slack) << ',' << format_double(r.ratio) << ','
           << (r.satisfied ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string histogram_csv(std::span<const double> histogram) {
    std::ostringstream os;
    os << "bin_center,probability\n";
    const int bins = static_cast<int>(histogram.size());
    for (int b = 0; b < bins; ++b) {
        const double center = -std::numbers::pi + 2.0 * std::numbers::pi * (b + 0.5) / bins;
        os << format_double(center) << ',' << format_double(histogram[b]) << '\n';
    }
    return os.str();
}

std::string tradeoff_csv(std::span<const TradeoffRow> rows) {
    std::ostringstream os;
    os << "weight,sigma_L,mu1,mu2,mu3,mu4,result2_slack,result2_ratio,satisfied\n";
    for (const auto& r : rows) {
        os << format_double(r.weight) << ',' << format_double(r.sigma_L);
        for (double m : r.mu_abs) os << ',' << format_double(m);
        os << ',' << format_double(r.result2_slack) << ',' << format_double(r.result2_ratio)
           << ',' << (r.satisfied ? "true" : "false") << '\n';
    }
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw StateIoError("cannot open for writing: " + path.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out) throw StateIoError("write failed: " + path.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace oamkit

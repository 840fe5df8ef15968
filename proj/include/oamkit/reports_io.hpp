#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "oamkit/fock.hpp"
#include "oamkit/inequality.hpp"
#include "oamkit/operators.hpp"
#include "oamkit/scenarios.hpp"

namespace oamkit {

using json = nlohmann::ordered_json;

// Field names mirror the report structs; complex numbers serialize as
// {"re": ..., "im": ...}. Non-finite ratio values (the +inf sentinel for a
// vanishing right-hand side) serialize as null.
json to_json(const OamReport& r);
json to_json(const MomentReport& r);
json to_json(const CovarianceReport& r);
json to_json(const InequalityReport& r);
json to_json(const GeneralizedReport& r);
json to_json(const ScenarioResult& r);

// CSV table: name,n,lhs,rhs,slack,ratio,satisfied (ratio as "inf" when
// infinite). Doubles printed with %.17g so round-trips are exact.
std::string inequality_csv(std::span<const InequalityReport> reports);

// CSV: bin_center,probability with bins spanning [-pi, pi).
std::string histogram_csv(std::span<const double> histogram);

// CSV: weight,sigma_L,mu1,mu2,mu3,mu4,result2_slack,result2_ratio,satisfied
std::string tradeoff_csv(std::span<const TradeoffRow> rows);

// Atomic write (temp + rename).
void write_text_file(const std::filesystem::path& path, const std::string& text);

std::string format_double(double v);

}  // namespace oamkit

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtcat/ribbon_modular.hpp"

namespace mtcat {

inline constexpr const char* kToolVersion = "mtcat 1.0.0";

enum class Check { pentagon, hexagon, triangle, ribbon, rigidity, modularity };

const char* to_string(Check c);
/// Parses a comma-separated list such as "pentagon,hexagon"; throws InputError.
std::set<Check> parse_checks(const std::string& list);
std::set<Check> all_checks();

struct CheckResult {
    std::optional<Scalar> residual;  // empty when the check could not be evaluated
    Scalar threshold = 0;
    bool pass = false;
};

struct ReportFile {
    std::map<std::string, CheckResult> checks;
    ModularReport modular;
    std::string input_hash;
    Scalar tolerance = kDefaultTolerance;
    ModularOptions options;

    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string to_text(const FusionRing& ring) const;
};

/// Evaluates the requested checks. Deterministic: equal inputs give equal output.
ReportFile run_report(const CategoryData& data, const std::set<Check>& checks, Scalar tolerance = kDefaultTolerance);

}  // namespace mtcat

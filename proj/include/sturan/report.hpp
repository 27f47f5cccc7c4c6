#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sturan {

/// Outcome of one verification driver. Every certificate carries enough
/// (graph6 strings, witnesses, λ values) to be re-checked independently.
struct Report
{
    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    std::string mode;
    bool pass = false;
    std::vector<nlohmann::json> certificates;
    nlohmann::json tallies = nlohmann::json::object();
    std::optional<double> runtime_ms;

    /// {claim, params, mode, pass, certificates, tallies, runtime_ms}, keys
    /// sorted, floats rounded to 12 significant digits; runtime_ms is null
    /// unless timing was recorded.
    nlohmann::json to_json() const;
};

/// Rounds to 12 significant digits and normalises −0 to 0.
double round_sig12(double x);

/// Applies round_sig12 to every floating-point value in place.
void round_floats(nlohmann::json& j);

} // namespace sturan

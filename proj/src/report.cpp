#include "sturan/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sturan {

double round_sig12(double x)
{
    if (!std::isfinite(x) || x == 0.0)
        return x == 0.0 ? 0.0 : x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

void round_floats(nlohmann::json& j)
{
    if (j.is_number_float()) {
        j = round_sig12(j.get<double>());
    } else if (j.is_structured()) {
        for (auto& child : j)
            round_floats(child);
    }
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["claim"] = claim;
    j["params"] = params;
    j["mode"] = mode;
    j["pass"] = pass;
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : certificates)
        j["certificates"].push_back(c);
    j["tallies"] = tallies;
    j["runtime_ms"] = runtime_ms ? nlohmann::json(*runtime_ms) : nlohmann::json(nullptr);
    round_floats(j);
    return j;
}

} // namespace sturan

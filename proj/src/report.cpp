#include "sigma6/report.hpp"

#include "json.hpp"

namespace sigma6 {

std::string report_to_json(const ExtremalReport& rep, bool stable) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["p_min_tenths"] = rep.p_min_tenths;
    j["closed_form_tenths"] = rep.closed_form_tenths;
    j["threshold_ok"] = rep.threshold_ok;
    j["minimizer_count"] = rep.minimizer_count;
    j["minimizer_codes"] = rep.minimizer_codes;
    j["family_matches"] = rep.family_matches;
    j["trees_enumerated"] = rep.trees_enumerated;
    j["elapsed_ms"] = stable ? 0 : rep.elapsed_ms;
    return j.dump(2) + "\n";
}

}  // namespace sigma6

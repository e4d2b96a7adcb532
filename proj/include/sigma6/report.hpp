#pragma once

#include <string>

#include "sigma6/search.hpp"

namespace sigma6 {

// JSON document with the fields n, p_min_tenths, closed_form_tenths,
// threshold_ok, minimizer_count, minimizer_codes, family_matches,
// trees_enumerated, elapsed_ms (in that order). With stable = true the
// elapsed_ms field is zeroed so identical inputs serialize byte-identically.
std::string report_to_json(const ExtremalReport& rep, bool stable = false);

}  // namespace sigma6

#pragma once

#include "tapoly/wirtinger.hpp"

#include <string>
#include <vector>

namespace tapoly {

// Built-in knots: presentation-table entries carry the exact generators,
// relators and peripheral words; the remaining entries come from the
// bundled PD-code table (see data/knots.pd) or a two-bridge normal form.
WirtingerData builtin_knot(const std::string& name);

std::vector<std::string> builtin_knot_names();

// the embedded copy of the bundled PD table
const std::string& builtin_pd_table();

} // namespace tapoly

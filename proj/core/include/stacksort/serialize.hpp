#pragma once

// Machine-readable output: JSON emitters for hook configurations,
// fertility profiles, and bound reports (count tables are declared with
// their module), plus the SVG renderer for colored diagrams. All output
// is deterministic: object keys appear in insertion order and map keys
// in numeric order.

#include <string>

#include "stacksort/bounds.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/hooks.hpp"

namespace stacksort {

std::string vhc_to_json(const Permutation& p, const ValidHookConfiguration& cfg);

// Adds the canonical b-tuple (as entry values and as positions), mu, e,
// and alpha to the configuration record.
std::string canonical_to_json(const Permutation& p, const CanonicalResult& result);

std::string profile_to_json(const Permutation& p, const FertilityProfile& prof);

std::string bound_report_to_json(const BoundReport& report);

// Colored diagram with hooks: one fixed palette indexed by color number,
// 24 px per unit, static output.
std::string vhc_to_svg(const Permutation& p, const ValidHookConfiguration& cfg);

} // namespace stacksort

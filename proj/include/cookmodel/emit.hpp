#pragma once

#include "cookmodel/mix.hpp"
#include "cookmodel/scenario.hpp"

#include <string>

namespace cookmodel {

enum class Format {
    table,
    csv,
    structured,
};

/// Deterministic text for each report shape. Column names and rounding are
/// documented in docs/format.md: GWh, kWh and currency print with two
/// decimals, emissions with one (two at MWh scale in the mix table),
/// factors and percentages with four.
std::string emit(const MixReport& report, Format format);
std::string emit(const NationalReport& report, Format format);
std::string emit(const HouseholdReport& report, Format format);
std::string emit(const ComparisonReport& report, Format format);
std::string emit(const AffordabilityReport& report, Format format);

/// Fixed-point formatting used by every emitter; scrubs negative zero.
std::string format_fixed(double value, int decimals);

} // namespace cookmodel

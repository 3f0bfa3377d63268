#pragma once

#include "cookmodel/document.hpp"
#include "cookmodel/scenario.hpp"

#include <optional>
#include <vector>

namespace cookmodel {

struct BuildResult {
    std::optional<Scenario> scenario;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return scenario.has_value(); }
};

/// Schema and semantic validation of a parsed document: required sections
/// and keys, value types, numeric domains, tariff block ordering, fuel
/// references, and the household partition constraint. All violations are
/// reported at once, each with the offending node's position. Unknown keys
/// are warnings; a scenario is still produced when only warnings occur.
BuildResult build_scenario(const ScenarioDocument& doc);

} // namespace cookmodel

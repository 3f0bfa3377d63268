#include "cookmodel/mix.hpp"

#include "cookmodel/validation.hpp"

#include <set>
#include <string>

namespace cookmodel {

void validate(const GenerationMix& mix)
{
    if (mix.sources.empty()) {
        throw ValidationError("mix " + std::to_string(mix.year) + " has no sources");
    }
    std::set<std::string> seen;
    for (const auto& s : mix.sources) {
        if (s.name.empty()) {
            throw ValidationError("mix " + std::to_string(mix.year) + " has a source with an empty name");
        }
        if (!seen.insert(s.name).second) {
            throw ValidationError("mix " + std::to_string(mix.year) + " has duplicate source '" + s.name + "'");
        }
        if (s.energy_mwh < 0.0) {
            throw ValidationError("source '" + s.name + "': energy_mwh must be >= 0");
        }
        if (!(s.primary_factor > 0.0)) {
            throw ValidationError("source '" + s.name + "': primary_factor must be > 0");
        }
        if (s.emission_factor < 0.0) {
            throw ValidationError("source '" + s.name + "': emission_factor must be >= 0");
        }
    }
}

double total_energy(const GenerationMix& mix)
{
    double total = 0.0;
    for (const auto& s : mix.sources) {
        total += s.energy_mwh;
    }
    return total;
}

AmountBreakdown primary_energy(const GenerationMix& mix)
{
    validate(mix);
    AmountBreakdown out;
    out.rows.reserve(mix.sources.size());
    for (const auto& s : mix.sources) {
        const double pe = s.energy_mwh * s.primary_factor;
        out.rows.push_back({s.name, pe});
        out.total += pe;
    }
    return out;
}

AmountBreakdown mix_emissions(const GenerationMix& mix)
{
    validate(mix);
    AmountBreakdown out;
    out.rows.reserve(mix.sources.size());
    for (const auto& s : mix.sources) {
        const double t = s.energy_mwh * s.emission_factor;
        out.rows.push_back({s.name, t});
        out.total += t;
    }
    return out;
}

double weighted_primary_factor(const GenerationMix& mix)
{
    validate(mix);
    const double energy = total_energy(mix);
    if (energy <= 0.0) {
        throw ValidationError("mix " + std::to_string(mix.year)
                              + ": weighted primary factor needs total energy > 0");
    }
    return primary_energy(mix).total / energy;
}

double grid_emission_factor(const GenerationMix& mix)
{
    validate(mix);
    const double energy = total_energy(mix);
    if (energy <= 0.0) {
        throw ValidationError("mix " + std::to_string(mix.year)
                              + ": grid emission factor needs total energy > 0");
    }
    return mix_emissions(mix).total / energy;
}

MixReport mix_report(const GenerationMix& mix)
{
    validate(mix);
    const double energy = total_energy(mix);
    if (energy <= 0.0) {
        throw ValidationError("mix " + std::to_string(mix.year)
                              + ": report needs total energy > 0");
    }

    MixReport report;
    report.year = mix.year;
    report.total_energy_mwh = energy;
    report.rows.reserve(mix.sources.size());
    for (const auto& s : mix.sources) {
        MixRow row;
        row.name = s.name;
        row.energy_mwh = s.energy_mwh;
        row.share_pct = 100.0 * s.energy_mwh / energy;
        row.primary_factor = s.primary_factor;
        row.primary_mwh = s.energy_mwh * s.primary_factor;
        row.emission_factor = s.emission_factor;
        row.emissions_tco2 = s.energy_mwh * s.emission_factor;
        report.total_primary_mwh += row.primary_mwh;
        report.total_emissions_tco2 += row.emissions_tco2;
        report.rows.push_back(std::move(row));
    }
    report.weighted_primary_factor = report.total_primary_mwh / energy;
    report.grid_emission_factor = report.total_emissions_tco2 / energy;
    return report;
}

} // namespace cookmodel

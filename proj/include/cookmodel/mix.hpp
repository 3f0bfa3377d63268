#pragma once

#include <string>
#include <vector>

namespace cookmodel {

/// One electricity generation source: annual production, conversion factor
/// to primary energy at the point of consumption, and CO2 emission factor
/// per MWh produced.
struct EnergySource {
    std::string name;
    double energy_mwh = 0.0;
    double primary_factor = 1.0; // dimensionless, > 0 (values below 1 are accepted)
    double emission_factor = 0.0; // tCO2/MWh
};

/// A year's generation mix. Immutable after construction; all operations
/// below are pure functions over it.
struct GenerationMix {
    int year = 0;
    std::vector<EnergySource> sources;
};

struct SourceAmount {
    std::string name;
    double amount = 0.0;
};

/// Per-source breakdown plus total, in the unit of the producing operation.
struct AmountBreakdown {
    std::vector<SourceAmount> rows;
    double total = 0.0;
};

struct MixRow {
    std::string name;
    double energy_mwh = 0.0;
    double share_pct = 0.0;
    double primary_factor = 0.0;
    double primary_mwh = 0.0;
    double emission_factor = 0.0;
    double emissions_tco2 = 0.0;
};

/// Full per-source table: shares, primary energy, emissions, and the
/// energy-weighted mean factors.
struct MixReport {
    int year = 0;
    std::vector<MixRow> rows;
    double total_energy_mwh = 0.0;
    double total_primary_mwh = 0.0;
    double weighted_primary_factor = 0.0;
    double total_emissions_tco2 = 0.0;
    double grid_emission_factor = 0.0;
};

/// Throws ValidationError on an empty mix, non-positive primary factor,
/// negative energy or emission factor, or duplicate/empty source names.
void validate(const GenerationMix& mix);

double total_energy(const GenerationMix& mix);

/// Primary energy per source (energy * primary_factor) and its total, MWh.
AmountBreakdown primary_energy(const GenerationMix& mix);

/// CO2 per source (energy * emission_factor) and its total, tCO2.
AmountBreakdown mix_emissions(const GenerationMix& mix);

/// Energy-weighted mean conversion factor, total primary / total energy.
/// Throws when total energy is zero.
double weighted_primary_factor(const GenerationMix& mix);

/// Energy-weighted mean emission factor, tCO2/MWh. Throws when total
/// energy is zero.
double grid_emission_factor(const GenerationMix& mix);

MixReport mix_report(const GenerationMix& mix);

} // namespace cookmodel

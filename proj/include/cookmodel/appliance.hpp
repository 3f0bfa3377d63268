#pragma once

#include <cstdint>
#include <string>

namespace cookmodel {

enum class Carrier {
    electricity,
    fuel,
};

/// One cooking technology as deployed in a scenario: what it runs on, how
/// much a household consumes, and how many households use it.
struct ApplianceProfile {
    std::string name;
    Carrier carrier = Carrier::electricity;
    std::string fuel_name; // set when carrier == fuel
    double monthly_final_kwh = 0.0;
    std::int64_t count = 0;
};

/// Physical properties of a cooking fuel. The emission factor applies to
/// final energy, not primary (the convention Table rows are built on).
struct FuelSpec {
    std::string name;
    double primary_factor = 1.0;
    double emission_factor_final = 0.0; // tCO2/MWh of final energy
    double cylinder_kg = 0.0;
    double monthly_kg_per_household = 0.0;
    std::string energy_basis_note;
};

struct MonthlyAnnual {
    double monthly_kwh = 0.0;
    double annual_kwh = 0.0;
};

/// monthly_final_kwh * 12, kWh per household and year.
double annual_final_energy(const ApplianceProfile& profile);

/// Final consumption scaled by the carrier's conversion factor. For an
/// electricity carrier pass weighted_primary_factor(mix); for a fuel
/// carrier the fuel's primary_factor. Throws on a non-positive factor.
MonthlyAnnual household_primary_energy(const ApplianceProfile& profile, double carrier_factor);

/// tCO2 per household and year: annual final kWh / 1000 * emission factor.
double household_emissions(const ApplianceProfile& profile, double emission_factor);

/// Cylinders bought per household and year, monthly mass / cylinder mass * 12.
/// Throws when cylinder_kg is zero.
double cylinders_per_year(const FuelSpec& fuel);

} // namespace cookmodel

#include "cookmodel/appliance.hpp"

#include "cookmodel/validation.hpp"

namespace cookmodel {

double annual_final_energy(const ApplianceProfile& profile)
{
    return profile.monthly_final_kwh * 12.0;
}

MonthlyAnnual household_primary_energy(const ApplianceProfile& profile, double carrier_factor)
{
    if (!(carrier_factor > 0.0)) {
        throw ValidationError("appliance '" + profile.name + "': carrier factor must be > 0");
    }
    MonthlyAnnual out;
    out.monthly_kwh = profile.monthly_final_kwh * carrier_factor;
    out.annual_kwh = out.monthly_kwh * 12.0;
    return out;
}

double household_emissions(const ApplianceProfile& profile, double emission_factor)
{
    // kWh -> MWh, then tCO2/MWh on final energy.
    return annual_final_energy(profile) / 1000.0 * emission_factor;
}

double cylinders_per_year(const FuelSpec& fuel)
{
    if (!(fuel.cylinder_kg > 0.0)) {
        throw ValidationError("fuel '" + fuel.name + "': cylinder_kg must be > 0");
    }
    return fuel.monthly_kg_per_household / fuel.cylinder_kg * 12.0;
}

} // namespace cookmodel

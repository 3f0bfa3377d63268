#include "cookmodel/scenario.hpp"

#include "cookmodel/validation.hpp"

#include <cmath>
#include <set>
#include <string>

namespace cookmodel {

namespace {

    const FuelEntry* find_fuel(const Scenario& scenario, const std::string& name)
    {
        for (const auto& f : scenario.fuels) {
            if (f.spec.name == name) {
                return &f;
            }
        }
        return nullptr;
    }

    void validate(const FuelSpec& fuel)
    {
        if (fuel.name.empty()) {
            throw ValidationError("fuel with an empty name");
        }
        if (!(fuel.primary_factor > 0.0) || !(fuel.emission_factor_final > 0.0)
            || !(fuel.cylinder_kg > 0.0) || !(fuel.monthly_kg_per_household > 0.0)) {
            throw ValidationError("fuel '" + fuel.name + "': all numeric fields must be > 0");
        }
    }

    double carrier_primary_factor(const Scenario& scenario, const ApplianceProfile& appliance)
    {
        if (appliance.carrier == Carrier::electricity) {
            return weighted_primary_factor(scenario.mix);
        }
        return find_fuel(scenario, appliance.fuel_name)->spec.primary_factor;
    }

    double carrier_emission_factor(const Scenario& scenario, const ApplianceProfile& appliance)
    {
        if (appliance.carrier == Carrier::electricity) {
            return grid_emission_factor(scenario.mix);
        }
        return find_fuel(scenario, appliance.fuel_name)->spec.emission_factor_final;
    }

    MetricDelta metric_delta(double reference, double alternative)
    {
        MetricDelta d;
        d.reference = reference;
        d.alternative = alternative;
        d.delta = alternative - reference;
        d.ratio = (reference == 0.0 && alternative == 0.0) ? 1.0 : alternative / reference;
        return d;
    }

} // namespace

void validate(const Scenario& scenario)
{
    validate(scenario.mix);
    validate(scenario.tariff);
    for (const auto& f : scenario.fuels) {
        validate(f.spec);
        if (f.pricing.user_price_per_cylinder < 0.0 || f.pricing.full_cost_per_cylinder < 0.0) {
            throw ValidationError("fuel '" + f.spec.name + "': cylinder prices must be >= 0");
        }
    }

    if (scenario.demographics.population <= 0.0) {
        throw ValidationError("scenario '" + scenario.name + "': population must be > 0");
    }
    if (scenario.demographics.households <= 0) {
        throw ValidationError("scenario '" + scenario.name + "': households must be > 0");
    }
    if (scenario.demographics.avg_household_size && !(*scenario.demographics.avg_household_size > 0.0)) {
        throw ValidationError("scenario '" + scenario.name + "': avg_household_size must be > 0");
    }

    std::set<std::string> names;
    std::int64_t total_count = 0;
    for (const auto& a : scenario.appliances) {
        if (a.name.empty() || !names.insert(a.name).second) {
            throw ValidationError("scenario '" + scenario.name + "': appliance names must be non-empty and unique");
        }
        if (a.monthly_final_kwh < 0.0) {
            throw ValidationError("appliance '" + a.name + "': monthly_final_kwh must be >= 0");
        }
        if (a.count < 0) {
            throw ValidationError("appliance '" + a.name + "': count must be >= 0");
        }
        if (a.carrier == Carrier::fuel && find_fuel(scenario, a.fuel_name) == nullptr) {
            throw ValidationError("appliance '" + a.name + "' references undefined fuel '" + a.fuel_name + "'");
        }
        total_count += a.count;
    }
    if (scenario.appliances.empty()) {
        throw ValidationError("scenario '" + scenario.name + "' has no appliances");
    }
    if (total_count != scenario.demographics.households) {
        throw ValidationError("scenario '" + scenario.name + "': appliance counts sum to "
                              + std::to_string(total_count) + " but households is "
                              + std::to_string(scenario.demographics.households));
    }
}

HouseholdReport household_report(const Scenario& scenario, std::string_view appliance_name)
{
    const ApplianceProfile* appliance = nullptr;
    for (const auto& a : scenario.appliances) {
        if (a.name == appliance_name) {
            appliance = &a;
            break;
        }
    }
    if (!appliance) {
        throw ValidationError("scenario '" + scenario.name + "' has no appliance '"
                              + std::string(appliance_name) + "'");
    }

    HouseholdReport report;
    report.appliance = appliance->name;
    report.monthly_final_kwh = appliance->monthly_final_kwh;
    report.annual_final_kwh = annual_final_energy(*appliance);
    if (appliance->carrier == Carrier::electricity) {
        report.cost_usd = electricity_breakdown(appliance->monthly_final_kwh, scenario.tariff);
    } else {
        const FuelEntry* fuel = find_fuel(scenario, appliance->fuel_name);
        if (!fuel) {
            throw ValidationError("appliance '" + appliance->name + "' references undefined fuel '"
                                  + appliance->fuel_name + "'");
        }
        report.cost_usd = fuel_breakdown(cylinders_per_year(fuel->spec), fuel->pricing);
    }
    return report;
}

NationalReport evaluate(const Scenario& scenario)
{
    validate(scenario);

    NationalReport report;
    report.scenario_name = scenario.name;
    report.year = scenario.year;
    report.rows.reserve(scenario.appliances.size());

    for (const auto& a : scenario.appliances) {
        const HouseholdReport hh = household_report(scenario, a.name);
        const double count = static_cast<double>(a.count);

        ApplianceRow row;
        row.appliance = a.name;
        row.annual_final_gwh = count * hh.annual_final_kwh / 1e6;
        row.monthly_final_gwh = row.annual_final_gwh / 12.0;
        row.primary_gwh = row.annual_final_gwh * carrier_primary_factor(scenario, a);
        row.cost_musd.user = count * hh.cost_usd.user / 1e6;
        row.cost_musd.total = count * hh.cost_usd.total / 1e6;
        row.cost_musd.subsidy = row.cost_musd.total - row.cost_musd.user;
        row.emissions_tco2 = count * household_emissions(a, carrier_emission_factor(scenario, a));

        report.total_monthly_final_gwh += row.monthly_final_gwh;
        report.total_annual_final_gwh += row.annual_final_gwh;
        report.total_primary_gwh += row.primary_gwh;
        report.total_cost_musd.user += row.cost_musd.user;
        report.total_cost_musd.subsidy += row.cost_musd.subsidy;
        report.total_cost_musd.total += row.cost_musd.total;
        report.total_emissions_tco2 += row.emissions_tco2;
        report.rows.push_back(std::move(row));
    }
    return report;
}

ComparisonReport compare(const Scenario& reference, const Scenario& alternative)
{
    const NationalReport a = evaluate(reference);
    const NationalReport b = evaluate(alternative);

    ComparisonReport report;
    report.reference_name = a.scenario_name;
    report.alternative_name = b.scenario_name;
    report.final_energy_gwh = metric_delta(a.total_annual_final_gwh, b.total_annual_final_gwh);
    report.primary_energy_gwh = metric_delta(a.total_primary_gwh, b.total_primary_gwh);
    report.total_cost_musd = metric_delta(a.total_cost_musd.total, b.total_cost_musd.total);
    report.subsidy_musd = metric_delta(a.total_cost_musd.subsidy, b.total_cost_musd.subsidy);
    report.emissions_tco2 = metric_delta(a.total_emissions_tco2, b.total_emissions_tco2);
    report.subsidy_savings_musd = a.total_cost_musd.subsidy - b.total_cost_musd.subsidy;
    report.emission_reduction_tco2 = a.total_emissions_tco2 - b.total_emissions_tco2;
    return report;
}

Affordability affordability(double annual_user_cost_usd, const Demographics& demographics)
{
    if (!(demographics.basic_basket > 0.0)) {
        throw ValidationError("affordability: basic_basket must be > 0");
    }
    if (!(demographics.minimum_wage > 0.0)) {
        throw ValidationError("affordability: minimum_wage must be > 0");
    }
    Affordability out;
    out.pct_of_basket = 100.0 * annual_user_cost_usd / demographics.basic_basket;
    out.pct_of_wage = 100.0 * annual_user_cost_usd / demographics.minimum_wage;
    return out;
}

double per_capita_subsidy(const NationalReport& report, const Demographics& demographics)
{
    if (!(demographics.population > 0.0)) {
        throw ValidationError("per-capita subsidy: population must be > 0");
    }
    return report.total_cost_musd.subsidy * 1e6 / demographics.population;
}

AffordabilityReport affordability_report(const Scenario& scenario)
{
    const NationalReport national = evaluate(scenario);

    AffordabilityReport report;
    report.scenario_name = scenario.name;
    report.year = scenario.year;
    report.rows.reserve(scenario.appliances.size());
    for (const auto& a : scenario.appliances) {
        const HouseholdReport hh = household_report(scenario, a.name);
        const Affordability aff = affordability(hh.cost_usd.user, scenario.demographics);
        report.rows.push_back({a.name, hh.cost_usd.user, aff.pct_of_basket, aff.pct_of_wage});
    }
    report.per_capita_subsidy_usd = per_capita_subsidy(national, scenario.demographics);
    return report;
}

double project_compound(double base, double annual_rate, int years)
{
    if (years < 0) {
        throw ValidationError("project_compound: years must be >= 0");
    }
    if (annual_rate <= -1.0) {
        throw ValidationError("project_compound: rate must be > -1");
    }
    return base * std::pow(1.0 + annual_rate, years);
}

} // namespace cookmodel

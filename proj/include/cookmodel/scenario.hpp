#pragma once

#include "cookmodel/appliance.hpp"
#include "cookmodel/mix.hpp"
#include "cookmodel/tariff.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cookmodel {

struct Demographics {
    double population = 0.0;
    std::int64_t households = 0;
    std::optional<double> avg_household_size;
    double minimum_wage = 0.0; // US$/y
    double basic_basket = 0.0; // US$/y
};

struct FuelEntry {
    FuelSpec spec;
    FuelPricing pricing;
};

/// Everything one evaluation needs: the generation mix, the fuels on the
/// market, the electricity tariff, the appliance fleet, and demographics.
/// Appliance counts must partition demographics.households exactly.
struct Scenario {
    std::string name = "scenario";
    int year = 0;
    GenerationMix mix;
    std::vector<FuelEntry> fuels;
    TariffSchedule tariff;
    std::vector<ApplianceProfile> appliances;
    Demographics demographics;
};

struct ApplianceRow {
    std::string appliance;
    double monthly_final_gwh = 0.0;
    double annual_final_gwh = 0.0;
    double primary_gwh = 0.0;
    CostBreakdown cost_musd; // user/subsidy/total, MUS$/y
    double emissions_tco2 = 0.0;
};

/// National totals per appliance plus whole-scenario sums. Every row
/// equals count * household values / 1e6.
struct NationalReport {
    std::string scenario_name;
    int year = 0;
    std::vector<ApplianceRow> rows;
    double total_monthly_final_gwh = 0.0;
    double total_annual_final_gwh = 0.0;
    double total_primary_gwh = 0.0;
    CostBreakdown total_cost_musd;
    double total_emissions_tco2 = 0.0;
};

struct HouseholdReport {
    std::string appliance;
    double monthly_final_kwh = 0.0;
    double annual_final_kwh = 0.0;
    CostBreakdown cost_usd; // US$/y
};

/// delta = alternative - reference, ratio = alternative / reference
/// (0/0 counts as 1 so self-comparison yields unit ratios).
struct MetricDelta {
    double reference = 0.0;
    double alternative = 0.0;
    double delta = 0.0;
    double ratio = 1.0;
};

struct ComparisonReport {
    std::string reference_name;
    std::string alternative_name;
    MetricDelta final_energy_gwh;
    MetricDelta primary_energy_gwh;
    MetricDelta total_cost_musd;
    MetricDelta subsidy_musd;
    MetricDelta emissions_tco2;
    double subsidy_savings_musd = 0.0;   // reference minus alternative
    double emission_reduction_tco2 = 0.0; // reference minus alternative
};

struct Affordability {
    double pct_of_basket = 0.0;
    double pct_of_wage = 0.0;
};

struct AffordabilityRow {
    std::string appliance;
    double annual_user_cost_usd = 0.0;
    double pct_of_basket = 0.0;
    double pct_of_wage = 0.0;
};

struct AffordabilityReport {
    std::string scenario_name;
    int year = 0;
    std::vector<AffordabilityRow> rows;
    double per_capita_subsidy_usd = 0.0;
};

/// Throws ValidationError on partition violations, missing fuel
/// references, or invalid nested parts.
void validate(const Scenario& scenario);

NationalReport evaluate(const Scenario& scenario);

HouseholdReport household_report(const Scenario& scenario, std::string_view appliance_name);

/// compare(reference, alternative): deltas/ratios are alternative relative
/// to reference; savings/reduction are reference minus alternative.
ComparisonReport compare(const Scenario& reference, const Scenario& alternative);

Affordability affordability(double annual_user_cost_usd, const Demographics& demographics);

double per_capita_subsidy(const NationalReport& report, const Demographics& demographics);

AffordabilityReport affordability_report(const Scenario& scenario);

/// base * (1 + annual_rate)^years. Throws when rate <= -1 or years < 0.
double project_compound(double base, double annual_rate, int years);

} // namespace cookmodel

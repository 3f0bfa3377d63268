#pragma once

#include <optional>
#include <vector>

namespace cookmodel {

/// One tariff block. An empty upper bound marks the open-ended last block.
/// Upper bounds are inclusive: consumption exactly at a bound pays the
/// lower block's rate.
struct TariffBlock {
    std::optional<double> upper_bound_kwh;
    double rate_per_kwh = 0.0;
};

/// Block (tiered) electricity tariff plus the real cost of production,
/// which anchors the subsidy computation.
struct TariffSchedule {
    std::vector<TariffBlock> blocks;
    double production_cost_per_kwh = 0.0;
};

struct FuelPricing {
    double user_price_per_cylinder = 0.0;
    double full_cost_per_cylinder = 0.0;
};

/// Annual cost decomposition. total == user + subsidy holds exactly by
/// construction; subsidy may be negative.
struct CostBreakdown {
    double user = 0.0;
    double subsidy = 0.0;
    double total = 0.0;
};

/// Throws ValidationError unless bounds are strictly increasing, exactly
/// the last block is unbounded, and all rates/costs are non-negative.
void validate(const TariffSchedule& schedule);

/// Monthly bill: each block charges its rate on the portion of consumption
/// falling inside it.
double electricity_user_cost(double monthly_kwh, const TariffSchedule& schedule);

/// Annual breakdown against the production-cost baseline; subsidy may be
/// negative when users pay above cost.
CostBreakdown electricity_breakdown(double monthly_kwh, const TariffSchedule& schedule);

/// Annual breakdown for cylinder-based fuel purchases.
CostBreakdown fuel_breakdown(double cylinders_per_year, const FuelPricing& pricing);

} // namespace cookmodel

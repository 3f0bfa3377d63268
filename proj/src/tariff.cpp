#include "cookmodel/tariff.hpp"

#include "cookmodel/validation.hpp"

#include <algorithm>

namespace cookmodel {

void validate(const TariffSchedule& schedule)
{
    if (schedule.blocks.empty()) {
        throw ValidationError("tariff schedule has no blocks");
    }
    double prev = 0.0;
    for (std::size_t i = 0; i < schedule.blocks.size(); ++i) {
        const auto& block = schedule.blocks[i];
        const bool last = i + 1 == schedule.blocks.size();
        if (block.upper_bound_kwh.has_value() == last) {
            throw ValidationError("tariff schedule: exactly the last block must be unbounded");
        }
        if (block.upper_bound_kwh) {
            if (i > 0 ? *block.upper_bound_kwh <= prev : *block.upper_bound_kwh <= 0.0) {
                throw ValidationError("tariff schedule: block bounds must be strictly increasing");
            }
            prev = *block.upper_bound_kwh;
        }
        if (block.rate_per_kwh < 0.0) {
            throw ValidationError("tariff schedule: block rates must be >= 0");
        }
    }
    if (schedule.production_cost_per_kwh < 0.0) {
        throw ValidationError("tariff schedule: production cost must be >= 0");
    }
}

double electricity_user_cost(double monthly_kwh, const TariffSchedule& schedule)
{
    validate(schedule);
    if (monthly_kwh < 0.0) {
        throw ValidationError("electricity consumption must be >= 0");
    }
    double cost = 0.0;
    double lower = 0.0;
    for (const auto& block : schedule.blocks) {
        const double upper = block.upper_bound_kwh
                                 ? std::min(monthly_kwh, *block.upper_bound_kwh)
                                 : monthly_kwh;
        if (upper > lower) {
            cost += (upper - lower) * block.rate_per_kwh;
        }
        if (!block.upper_bound_kwh || monthly_kwh <= *block.upper_bound_kwh) {
            break;
        }
        lower = *block.upper_bound_kwh;
    }
    return cost;
}

CostBreakdown electricity_breakdown(double monthly_kwh, const TariffSchedule& schedule)
{
    CostBreakdown out;
    out.user = electricity_user_cost(monthly_kwh, schedule) * 12.0;
    out.total = monthly_kwh * 12.0 * schedule.production_cost_per_kwh;
    out.subsidy = out.total - out.user;
    return out;
}

CostBreakdown fuel_breakdown(double cylinders_per_year, const FuelPricing& pricing)
{
    if (cylinders_per_year < 0.0) {
        throw ValidationError("cylinders per year must be >= 0");
    }
    CostBreakdown out;
    out.user = cylinders_per_year * pricing.user_price_per_cylinder;
    out.total = cylinders_per_year * pricing.full_cost_per_cylinder;
    out.subsidy = out.total - out.user;
    return out;
}

} // namespace cookmodel

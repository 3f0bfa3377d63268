#pragma once

// In-code copies of the bundled fixture scenarios, for tests that want a
// Scenario without going through the parser.

#include "cookmodel/scenario.hpp"

namespace testfix {

inline cookmodel::GenerationMix mix_2014()
{
    return {2014,
            {
                {"biomass", 399471.18, 3.04, 0.0},
                {"solar", 16482.7, 1.0, 0.0},
                {"wind", 79742.47, 1.0, 0.0},
                {"hydro", 11457895.6, 1.0, 0.0},
                {"fuel_oil", 5483600.4, 2.77, 0.8},
                {"natural_gas", 2964552.7, 1.95, 0.8},
                {"diesel", 2759169.0, 2.77, 0.8},
                {"crude_oil", 1146299.3, 2.77, 0.8},
            }};
}

inline cookmodel::GenerationMix mix_2022()
{
    return {2022,
            {
                {"renewable", 553000.0, 2.6440, 0.0},
                {"hydro", 35729000.0, 1.0, 0.0},
                {"thermo", 6420000.0, 2.573216, 0.8},
            }};
}

inline cookmodel::FuelEntry lpg(double user_price)
{
    cookmodel::FuelEntry fuel;
    fuel.spec = {"lpg", 1.05, 0.234080, 15.0, 17.6, ""};
    fuel.pricing = {user_price, 20.00};
    return fuel;
}

inline cookmodel::Scenario baseline_2014()
{
    cookmodel::Scenario s;
    s.name = "baseline-2014";
    s.year = 2014;
    s.mix = mix_2014();
    s.fuels = {lpg(1.60)};
    s.tariff = {{{80.0, 0.0}, {std::nullopt, 0.092}}, 0.162};
    s.appliances = {
        {"lpg_stove", cookmodel::Carrier::fuel, "lpg", 265.39, 3407375},
        {"induction_stove", cookmodel::Carrier::electricity, "", 96.0, 50000},
    };
    s.demographics = {16026220.3, 3457375, std::nullopt, 4080.00, 7548.12};
    return s;
}

inline cookmodel::Scenario bau_2022()
{
    cookmodel::Scenario s;
    s.name = "bau-2022";
    s.year = 2022;
    s.mix = mix_2022();
    s.fuels = {lpg(1.60)};
    s.tariff = {{{80.0, 0.0}, {std::nullopt, 0.0858}}, 0.0615};
    s.appliances = {
        {"lpg_stove", cookmodel::Carrier::fuel, "lpg", 265.39, 4759570},
        {"induction_stove", cookmodel::Carrier::electricity, "", 96.0, 70029},
    };
    s.demographics = {18044656.0, 4829599, std::nullopt, 4080.00, 7548.12};
    return s;
}

inline cookmodel::Scenario np_2022()
{
    cookmodel::Scenario s;
    s.name = "np-2022";
    s.year = 2022;
    s.mix = mix_2022();
    s.fuels = {lpg(20.00)};
    s.tariff = {{{80.0, 0.04}, {std::nullopt, 0.0858}}, 0.0615};
    s.appliances = {
        {"lpg_stove", cookmodel::Carrier::fuel, "lpg", 265.39, 140804},
        {"induction_stove", cookmodel::Carrier::electricity, "", 96.0, 4688795},
    };
    s.demographics = {18044656.0, 4829599, std::nullopt, 4080.00, 7548.12};
    return s;
}

} // namespace testfix

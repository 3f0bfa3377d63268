#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cookmodel/mix.hpp"
#include "cookmodel/validation.hpp"

#include "helpers.hpp"

using namespace cookmodel;

// Expected values below were computed independently with 64-bit floats in
// the same accumulation order and frozen at full precision.

TEST_CASE("2014 mix totals and weighted factors")
{
    const GenerationMix mix = testfix::mix_2014();
    CHECK(total_energy(mix) == 24307213.35);
    CHECK(primary_energy(mix).total == 44557111.221200004);
    CHECK(mix_emissions(mix).total == 9882897.12);
    CHECK(weighted_primary_factor(mix) == 1.8330818337594426);
    CHECK(grid_emission_factor(mix) == 0.406582892810294);
}

TEST_CASE("2014 per-source primary energy")
{
    const AmountBreakdown pe = primary_energy(testfix::mix_2014());
    REQUIRE(pe.rows.size() == 8);
    CHECK(pe.rows[0].name == "biomass");
    CHECK(pe.rows[0].amount == 1214392.3872);
    CHECK(pe.rows[1].amount == 16482.7);
    CHECK(pe.rows[2].amount == 79742.47);
    CHECK(pe.rows[3].amount == 11457895.6);
    CHECK(pe.rows[4].amount == 15189573.108000001);
    CHECK(pe.rows[5].amount == 5780877.765000001);
    CHECK(pe.rows[6].amount == 7642898.13);
    CHECK(pe.rows[7].name == "crude_oil");
    CHECK(pe.rows[7].amount == 3175249.061);
}

TEST_CASE("2014 per-source emissions")
{
    const AmountBreakdown em = mix_emissions(testfix::mix_2014());
    REQUIRE(em.rows.size() == 8);
    for (int i = 0; i < 4; ++i) {
        CHECK(em.rows[i].amount == 0.0); // biomass, solar, wind, hydro
    }
    CHECK(em.rows[4].amount == 4386880.32);
    CHECK(em.rows[5].amount == 2371642.16);
    CHECK(em.rows[6].amount == 2207335.2);
    CHECK(em.rows[7].amount == 917039.4400000001);
}

TEST_CASE("2022 mix totals and weighted factors")
{
    const GenerationMix mix = testfix::mix_2022();
    CHECK(total_energy(mix) == 42702000.0);
    CHECK(primary_energy(mix).total == 53711178.72);
    CHECK(mix_emissions(mix).total == 5136000.0);
    CHECK(weighted_primary_factor(mix) == 1.2578141239286216);
    CHECK(grid_emission_factor(mix) == 0.12027539693691162);
}

TEST_CASE("mix report rows, shares, and totals")
{
    const MixReport report = mix_report(testfix::mix_2014());
    CHECK(report.year == 2014);
    REQUIRE(report.rows.size() == 8);

    const MixRow& hydro = report.rows[3];
    CHECK(hydro.name == "hydro");
    CHECK(hydro.share_pct == doctest::Approx(47.137841080413274).epsilon(1e-12));
    CHECK(hydro.primary_mwh == 11457895.6);
    CHECK(hydro.emissions_tco2 == 0.0);

    double share_sum = 0.0;
    double primary_sum = 0.0;
    double emissions_sum = 0.0;
    for (const auto& row : report.rows) {
        share_sum += row.share_pct;
        primary_sum += row.primary_mwh;
        emissions_sum += row.emissions_tco2;
    }
    CHECK(share_sum == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(primary_sum == report.total_primary_mwh); // same accumulation order
    CHECK(emissions_sum == report.total_emissions_tco2);
    CHECK(report.total_energy_mwh == 24307213.35);
    CHECK(report.weighted_primary_factor == 1.8330818337594426);
    CHECK(report.grid_emission_factor == 0.406582892810294);
}

TEST_CASE("single-source mix: factors pass through exactly")
{
    // 1024 MWh so every scaling stays exact in binary floating point
    const GenerationMix mix{2020, {{"only", 1024.0, 2.5, 0.3}}};
    CHECK(weighted_primary_factor(mix) == 2.5);
    CHECK(grid_emission_factor(mix) == 0.3);
}

TEST_CASE("all-renewable mix emits nothing")
{
    const GenerationMix mix{2030,
                            {{"hydro", 5000.0, 1.0, 0.0},
                             {"wind", 800.0, 1.0, 0.0},
                             {"solar", 200.0, 1.0, 0.0}}};
    CHECK(mix_emissions(mix).total == 0.0);
    CHECK(grid_emission_factor(mix) == 0.0);
}

TEST_CASE("zero-energy source contributes nothing")
{
    GenerationMix mix = testfix::mix_2022();
    mix.sources.push_back({"idle_plant", 0.0, 3.5, 1.2});
    CHECK(total_energy(mix) == 42702000.0);
    CHECK(primary_energy(mix).total == 53711178.72);
    CHECK(mix_emissions(mix).total == 5136000.0);
}

TEST_CASE("doubling every source doubles energy and keeps factors")
{
    GenerationMix mix = testfix::mix_2014();
    const double wpf = weighted_primary_factor(mix);
    const double gef = grid_emission_factor(mix);
    const double pe = primary_energy(mix).total;
    for (auto& s : mix.sources) {
        s.energy_mwh *= 2.0;
    }
    CHECK(primary_energy(mix).total == 2.0 * pe);
    CHECK(weighted_primary_factor(mix) == wpf);
    CHECK(grid_emission_factor(mix) == gef);
}

TEST_CASE("weighted factor lies between the extreme source factors")
{
    const GenerationMix mix = testfix::mix_2014();
    const double wpf = weighted_primary_factor(mix);
    CHECK(wpf >= 1.0);  // smallest factor in the mix
    CHECK(wpf <= 3.04); // largest factor in the mix
}

TEST_CASE("validation rejects malformed mixes")
{
    CHECK_THROWS_AS(validate(GenerationMix{2014, {}}), ValidationError);

    GenerationMix dup = testfix::mix_2022();
    dup.sources.push_back(dup.sources.front());
    CHECK_THROWS_AS(validate(dup), ValidationError);

    GenerationMix unnamed{2014, {{"", 10.0, 1.0, 0.0}}};
    CHECK_THROWS_AS(validate(unnamed), ValidationError);

    GenerationMix negative{2014, {{"x", -1.0, 1.0, 0.0}}};
    CHECK_THROWS_AS(validate(negative), ValidationError);

    GenerationMix zero_factor{2014, {{"x", 10.0, 0.0, 0.0}}};
    CHECK_THROWS_AS(validate(zero_factor), ValidationError);

    GenerationMix negative_ef{2014, {{"x", 10.0, 1.0, -0.1}}};
    CHECK_THROWS_AS(validate(negative_ef), ValidationError);
}

TEST_CASE("zero total energy has no weighted factors")
{
    const GenerationMix mix{2014, {{"idle", 0.0, 2.0, 0.5}}};
    CHECK_THROWS_AS(weighted_primary_factor(mix), ValidationError);
    CHECK_THROWS_AS(grid_emission_factor(mix), ValidationError);
    CHECK_THROWS_AS(mix_report(mix), ValidationError);
    CHECK(total_energy(mix) == 0.0);
}

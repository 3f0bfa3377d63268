#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cookmodel/emit.hpp"

#include <json.hpp>

#include <string>

#include "helpers.hpp"

using namespace cookmodel;

namespace {

std::string squash(const std::string& text)
{
    // collapse whitespace runs so table alignment does not matter
    std::string out;
    bool in_ws = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n') {
            in_ws = true;
            continue;
        }
        if (in_ws && !out.empty()) {
            out += ' ';
        }
        in_ws = false;
        out += c;
    }
    return out;
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("fixed-point formatting")
{
    CHECK(format_fixed(2540095.4814312, 1) == "2540095.5");
    CHECK(format_fixed(1161.9784170496, 2) == "1161.98");
    CHECK(format_fixed(100.0, 4) == "100.0000");
    CHECK(format_fixed(0.0, 2) == "0.00");
    CHECK(format_fixed(-0.0, 2) == "0.00");
    CHECK(format_fixed(-0.004, 2) == "0.00"); // rounds to negative zero, scrubbed
    CHECK(format_fixed(-1.0, 2) == "-1.00");
    CHECK(format_fixed(-0.006, 2) == "-0.01");
    CHECK(format_fixed(54.873599999999996, 2) == "54.87");
    CHECK(format_fixed(16017.064908987855, 2) == "16017.06");
}

TEST_CASE("national report as comma-separated values")
{
    const std::string expected =
        "appliance,monthly_final_gwh,annual_final_gwh,primary_gwh,total_cost_musd,subsidy_musd,emissions_tco2\n"
        "lpg_stove,904.28,10851.40,11393.97,959.52,882.76,2540095.5\n"
        "induction_stove,4.80,57.60,105.59,9.33,8.45,23419.2\n"
        "total,909.08,10909.00,11499.55,968.85,891.20,2563514.7\n";
    CHECK(emit(evaluate(testfix::baseline_2014()), Format::csv) == expected);

    const std::string bau =
        "appliance,monthly_final_gwh,annual_final_gwh,primary_gwh,total_cost_musd,subsidy_musd,emissions_tco2\n"
        "lpg_stove,1263.14,15157.71,15915.59,1340.29,1233.07,3548116.1\n"
        "induction_stove,6.72,80.67,101.47,4.96,3.81,9703.0\n"
        "total,1269.87,15238.38,16017.06,1345.26,1236.88,3557819.2\n";
    CHECK(emit(evaluate(testfix::bau_2022()), Format::csv) == bau);

    const std::string np =
        "appliance,monthly_final_gwh,annual_final_gwh,primary_gwh,total_cost_musd,subsidy_musd,emissions_tco2\n"
        "lpg_stove,37.37,448.42,470.84,39.65,0.00,104965.1\n"
        "induction_stove,450.12,5401.49,6794.07,332.19,74.90,649666.6\n"
        "total,487.49,5849.91,7264.91,371.84,74.90,754631.7\n";
    CHECK(emit(evaluate(testfix::np_2022()), Format::csv) == np);
}

TEST_CASE("mix report as comma-separated values")
{
    const std::string expected =
        "source,energy_mwh,share_pct,primary_factor,primary_mwh,emission_factor,emissions_tco2\n"
        "biomass,399471.18,1.6434,3.0400,1214392.39,0.0000,0.00\n"
        "solar,16482.70,0.0678,1.0000,16482.70,0.0000,0.00\n"
        "wind,79742.47,0.3281,1.0000,79742.47,0.0000,0.00\n"
        "hydro,11457895.60,47.1378,1.0000,11457895.60,0.0000,0.00\n"
        "fuel_oil,5483600.40,22.5596,2.7700,15189573.11,0.8000,4386880.32\n"
        "natural_gas,2964552.70,12.1962,1.9500,5780877.77,0.8000,2371642.16\n"
        "diesel,2759169.00,11.3512,2.7700,7642898.13,0.8000,2207335.20\n"
        "crude_oil,1146299.30,4.7159,2.7700,3175249.06,0.8000,917039.44\n"
        "total,24307213.35,100.0000,1.8331,44557111.22,0.4066,9882897.12\n";
    CHECK(emit(mix_report(testfix::mix_2014()), Format::csv) == expected);
}

TEST_CASE("mix report as a table")
{
    const std::string text = emit(mix_report(testfix::mix_2014()), Format::table);
    CHECK(contains(text, "year: 2014"));
    const std::string flat = squash(text);
    CHECK(contains(flat, "source energy_mwh share_pct primary_factor primary_mwh "
                         "emission_factor emissions_tco2"));
    CHECK(contains(flat, "hydro 11457895.60 47.1378 1.0000 11457895.60 0.0000 0.00"));
    CHECK(contains(flat, "total 24307213.35 100.0000 1.8331 44557111.22 0.4066 9882897.12"));
}

TEST_CASE("national report as a table includes user costs")
{
    const std::string flat = squash(emit(evaluate(testfix::baseline_2014()), Format::table));
    CHECK(contains(flat, "scenario: baseline-2014 year: 2014"));
    CHECK(contains(flat,
                   "lpg_stove 904.28 10851.40 11393.97 76.76 882.76 959.52 2540095.5"));
    CHECK(contains(flat, "total 909.08 10909.00 11499.55 77.64 891.20 968.85 2563514.7"));
}

TEST_CASE("household report formats")
{
    const HouseholdReport report = household_report(testfix::np_2022(), "induction_stove");

    const std::string flat = squash(emit(report, Format::table));
    CHECK(contains(flat, "appliance: induction_stove"));
    CHECK(contains(flat, "Monthly final energy kWh 96.00"));
    CHECK(contains(flat, "Annual final energy kWh 1152.00"));
    CHECK(contains(flat, "User cost per year 54.87"));
    CHECK(contains(flat, "Subsidy per year 15.97"));
    CHECK(contains(flat, "Total cost per year 70.85"));

    const std::string csv = emit(report, Format::csv);
    CHECK(csv ==
          "appliance,monthly_final_kwh,annual_final_kwh,user_cost_usd,subsidy_usd,total_cost_usd\n"
          "induction_stove,96.00,1152.00,54.87,15.97,70.85\n");
}

TEST_CASE("comparison report formats")
{
    const ComparisonReport report = compare(testfix::bau_2022(), testfix::np_2022());

    const std::string table = emit(report, Format::table);
    CHECK(contains(table, "reference: bau-2022\n"));
    CHECK(contains(table, "alternative: np-2022\n"));
    CHECK(contains(table, "subsidy_savings_musd: 1161.98\n"));
    CHECK(contains(table, "emission_reduction_tco2: 2803187.45\n"));
    const std::string flat = squash(table);
    CHECK(contains(flat, "metric reference alternative delta ratio"));
    CHECK(contains(flat, "final_energy_gwh 15238.38 5849.91 -9388.47 0.3839"));
    CHECK(contains(flat, "subsidy_musd 1236.88 74.90 -1161.98 0.0606"));

    const std::string csv = emit(report, Format::csv);
    CHECK(contains(csv, "metric,reference,alternative,delta,ratio\n"));
    CHECK(contains(csv, "primary_energy_gwh,16017.06,7264.91,-8752.16,0.4536\n"));
    CHECK(contains(csv, "subsidy_savings_musd,1161.98,,,\n"));

    const std::string base_np =
        emit(compare(testfix::baseline_2014(), testfix::np_2022()), Format::table);
    CHECK(contains(base_np, "emission_reduction_tco2: 1808882.94\n"));
}

TEST_CASE("self-comparison prints zero deltas and unit ratios")
{
    const Scenario s = testfix::baseline_2014();
    const std::string flat = squash(emit(compare(s, s), Format::table));
    CHECK(contains(flat, "final_energy_gwh 10909.00 10909.00 0.00 1.0000"));
    CHECK(contains(flat, "primary_energy_gwh 11499.55 11499.55 0.00 1.0000"));
    CHECK(contains(flat, "total_cost_musd 968.85 968.85 0.00 1.0000"));
    CHECK(contains(flat, "subsidy_musd 891.20 891.20 0.00 1.0000"));
    CHECK(contains(flat, "emissions_tco2 2563514.66 2563514.66 0.00 1.0000"));
    CHECK(contains(flat, "subsidy_savings_musd: 0.00"));
    CHECK(contains(flat, "emission_reduction_tco2: 0.00"));
}

TEST_CASE("affordability report formats")
{
    const AffordabilityReport report = affordability_report(testfix::np_2022());

    const std::string table = emit(report, Format::table);
    CHECK(contains(table, "per_capita_subsidy_usd: 4.15\n"));
    const std::string flat = squash(table);
    CHECK(contains(flat, "appliance annual_user_cost_usd pct_of_basket pct_of_wage"));
    CHECK(contains(flat, "lpg_stove 281.60 3.7307 6.9020"));
    CHECK(contains(flat, "induction_stove 54.87 0.7270 1.3449"));

    const std::string csv = emit(report, Format::csv);
    CHECK(csv == "appliance,annual_user_cost_usd,pct_of_basket,pct_of_wage\n"
                 "lpg_stove,281.60,3.7307,6.9020\n"
                 "induction_stove,54.87,0.7270,1.3449\n"
                 "per_capita_subsidy_usd,4.15,,\n");
}

TEST_CASE("structured output carries presentation-rounded numbers")
{
    const auto national = nlohmann::json::parse(
        emit(evaluate(testfix::baseline_2014()), Format::structured));
    CHECK(national["scenario"] == "baseline-2014");
    CHECK(national["year"] == 2014);
    REQUIRE(national["rows"].size() == 2);
    CHECK(national["rows"][0]["appliance"] == "lpg_stove");
    CHECK(national["rows"][0]["primary_gwh"] == 11393.97);
    CHECK(national["rows"][0]["emissions_tco2"] == 2540095.5);
    CHECK(national["total"]["subsidy_musd"] == 891.2);
    CHECK(national["total"]["total_cost_musd"] == 968.85);

    const auto mix = nlohmann::json::parse(
        emit(mix_report(testfix::mix_2014()), Format::structured));
    CHECK(mix["year"] == 2014);
    CHECK(mix["total"]["primary_factor"] == 1.8331);
    CHECK(mix["total"]["emission_factor"] == 0.4066);
    CHECK(mix["rows"][0]["source"] == "biomass");
    CHECK(mix["rows"][0]["primary_mwh"] == 1214392.39);

    const auto household = nlohmann::json::parse(
        emit(household_report(testfix::np_2022(), "induction_stove"), Format::structured));
    CHECK(household["user_cost_usd"] == 54.87);

    const auto comparison = nlohmann::json::parse(
        emit(compare(testfix::bau_2022(), testfix::np_2022()), Format::structured));
    CHECK(comparison["subsidy_savings_musd"] == 1161.98);
    CHECK(comparison["metrics"][0]["metric"] == "final_energy_gwh");
    CHECK(comparison["metrics"][0]["ratio"] == 0.3839);

    const auto affordability = nlohmann::json::parse(
        emit(affordability_report(testfix::np_2022()), Format::structured));
    CHECK(affordability["per_capita_subsidy_usd"] == 4.15);
    CHECK(affordability["rows"][1]["pct_of_wage"] == 1.3449);
}

TEST_CASE("emission is deterministic")
{
    const NationalReport report = evaluate(testfix::bau_2022());
    for (Format format : {Format::table, Format::csv, Format::structured}) {
        CHECK(emit(report, format) == emit(report, format));
    }
}

TEST_CASE("names with separators are quoted in comma-separated output")
{
    MixReport report;
    report.year = 2024;
    report.rows.push_back({"coal, \"dirty\"", 100.0, 100.0, 1.0, 100.0, 1.0, 100.0});
    report.total_energy_mwh = 100.0;
    report.total_primary_mwh = 100.0;
    report.weighted_primary_factor = 1.0;
    report.total_emissions_tco2 = 100.0;
    report.grid_emission_factor = 1.0;
    const std::string csv = emit(report, Format::csv);
    CHECK(contains(csv, "\"coal, \"\"dirty\"\"\",100.00,"));
}

#include "cookmodel/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace cookmodel {

namespace {

    using ordered_json = nlohmann::ordered_json;

    // decimal places per quantity: energy and currency 2, emissions 1
    // (2 at MWh scale), factors/shares/ratios 4
    constexpr int dp_energy = 2;
    constexpr int dp_currency = 2;
    constexpr int dp_emissions = 1;
    constexpr int dp_mix = 2;
    constexpr int dp_factor = 4;

    /// Rounded value as a JSON number so structured output carries the same
    /// presentation rounding as the text formats.
    ordered_json rounded(double value, int decimals)
    {
        return std::strtod(format_fixed(value, decimals).c_str(), nullptr);
    }

    std::string csv_field(const std::string& text)
    {
        if (text.find_first_of(",\"\n\r") == std::string::npos) {
            return text;
        }
        std::string quoted = "\"";
        for (char c : text) {
            if (c == '"') {
                quoted += '"';
            }
            quoted += c;
        }
        quoted += '"';
        return quoted;
    }

    std::string csv_line(const std::vector<std::string>& fields)
    {
        std::string line;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                line += ',';
            }
            line += csv_field(fields[i]);
        }
        line += '\n';
        return line;
    }

    /// Aligned text table: first column left-justified, the rest right.
    class TextTable {
    public:
        void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

        std::string render() const
        {
            std::vector<std::size_t> width;
            for (const auto& r : rows_) {
                if (width.size() < r.size()) {
                    width.resize(r.size(), 0);
                }
                for (std::size_t i = 0; i < r.size(); ++i) {
                    width[i] = std::max(width[i], r[i].size());
                }
            }
            std::string out;
            for (const auto& r : rows_) {
                std::string line;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    if (i > 0) {
                        line += "  ";
                    }
                    const std::string& cell = r[i];
                    if (i == 0) {
                        line += cell;
                        if (i + 1 < r.size()) {
                            line.append(width[i] - cell.size(), ' ');
                        }
                    } else {
                        line.append(width[i] - cell.size(), ' ');
                        line += cell;
                    }
                }
                out += line;
                out += '\n';
            }
            return out;
        }

    private:
        std::vector<std::vector<std::string>> rows_;
    };

    std::string fx(double value, int decimals) { return format_fixed(value, decimals); }

    // ---- mix ---------------------------------------------------------

    std::vector<std::string> mix_cells(const MixRow& r)
    {
        return {r.name, fx(r.energy_mwh, dp_mix), fx(r.share_pct, dp_factor),
                fx(r.primary_factor, dp_factor), fx(r.primary_mwh, dp_mix),
                fx(r.emission_factor, dp_factor), fx(r.emissions_tco2, dp_mix)};
    }

    std::vector<std::string> mix_total_cells(const MixReport& report)
    {
        return {"total", fx(report.total_energy_mwh, dp_mix), fx(100.0, dp_factor),
                fx(report.weighted_primary_factor, dp_factor), fx(report.total_primary_mwh, dp_mix),
                fx(report.grid_emission_factor, dp_factor), fx(report.total_emissions_tco2, dp_mix)};
    }

    const std::vector<std::string> mix_header = {"source", "energy_mwh", "share_pct",
                                                 "primary_factor", "primary_mwh",
                                                 "emission_factor", "emissions_tco2"};

    std::string emit_mix_table(const MixReport& report)
    {
        std::string out = "year: " + std::to_string(report.year) + "\n\n";
        TextTable table;
        table.row(mix_header);
        for (const auto& r : report.rows) {
            table.row(mix_cells(r));
        }
        table.row(mix_total_cells(report));
        return out + table.render();
    }

    std::string emit_mix_csv(const MixReport& report)
    {
        std::string out = csv_line(mix_header);
        for (const auto& r : report.rows) {
            out += csv_line(mix_cells(r));
        }
        out += csv_line(mix_total_cells(report));
        return out;
    }

    std::string emit_mix_structured(const MixReport& report)
    {
        ordered_json j;
        j["year"] = report.year;
        j["rows"] = ordered_json::array();
        for (const auto& r : report.rows) {
            j["rows"].push_back({{"source", r.name},
                                 {"energy_mwh", rounded(r.energy_mwh, dp_mix)},
                                 {"share_pct", rounded(r.share_pct, dp_factor)},
                                 {"primary_factor", rounded(r.primary_factor, dp_factor)},
                                 {"primary_mwh", rounded(r.primary_mwh, dp_mix)},
                                 {"emission_factor", rounded(r.emission_factor, dp_factor)},
                                 {"emissions_tco2", rounded(r.emissions_tco2, dp_mix)}});
        }
        j["total"] = {{"energy_mwh", rounded(report.total_energy_mwh, dp_mix)},
                      {"share_pct", 100.0},
                      {"primary_factor", rounded(report.weighted_primary_factor, dp_factor)},
                      {"primary_mwh", rounded(report.total_primary_mwh, dp_mix)},
                      {"emission_factor", rounded(report.grid_emission_factor, dp_factor)},
                      {"emissions_tco2", rounded(report.total_emissions_tco2, dp_mix)}};
        return j.dump(2) + "\n";
    }

    // ---- national ------------------------------------------------------

    const std::vector<std::string> national_csv_header = {
        "appliance",       "monthly_final_gwh", "annual_final_gwh", "primary_gwh",
        "total_cost_musd", "subsidy_musd",      "emissions_tco2"};

    std::vector<std::string> national_csv_cells(const ApplianceRow& r)
    {
        return {r.appliance,
                fx(r.monthly_final_gwh, dp_energy),
                fx(r.annual_final_gwh, dp_energy),
                fx(r.primary_gwh, dp_energy),
                fx(r.cost_musd.total, dp_currency),
                fx(r.cost_musd.subsidy, dp_currency),
                fx(r.emissions_tco2, dp_emissions)};
    }

    std::vector<std::string> national_csv_totals(const NationalReport& report)
    {
        return {"total",
                fx(report.total_monthly_final_gwh, dp_energy),
                fx(report.total_annual_final_gwh, dp_energy),
                fx(report.total_primary_gwh, dp_energy),
                fx(report.total_cost_musd.total, dp_currency),
                fx(report.total_cost_musd.subsidy, dp_currency),
                fx(report.total_emissions_tco2, dp_emissions)};
    }

    std::string emit_national_table(const NationalReport& report)
    {
        std::string out = "scenario: " + report.scenario_name + "\n";
        out += "year: " + std::to_string(report.year) + "\n\n";
        TextTable table;
        table.row({"appliance", "monthly_final_gwh", "annual_final_gwh", "primary_gwh",
                   "user_cost_musd", "subsidy_musd", "total_cost_musd", "emissions_tco2"});
        auto cells = [](const std::string& name, double monthly, double annual, double primary,
                        const CostBreakdown& cost, double emissions) {
            return std::vector<std::string>{name,
                                            fx(monthly, dp_energy),
                                            fx(annual, dp_energy),
                                            fx(primary, dp_energy),
                                            fx(cost.user, dp_currency),
                                            fx(cost.subsidy, dp_currency),
                                            fx(cost.total, dp_currency),
                                            fx(emissions, dp_emissions)};
        };
        for (const auto& r : report.rows) {
            table.row(cells(r.appliance, r.monthly_final_gwh, r.annual_final_gwh, r.primary_gwh,
                            r.cost_musd, r.emissions_tco2));
        }
        table.row(cells("total", report.total_monthly_final_gwh, report.total_annual_final_gwh,
                        report.total_primary_gwh, report.total_cost_musd,
                        report.total_emissions_tco2));
        return out + table.render();
    }

    std::string emit_national_csv(const NationalReport& report)
    {
        std::string out = csv_line(national_csv_header);
        for (const auto& r : report.rows) {
            out += csv_line(national_csv_cells(r));
        }
        out += csv_line(national_csv_totals(report));
        return out;
    }

    std::string emit_national_structured(const NationalReport& report)
    {
        ordered_json j;
        j["scenario"] = report.scenario_name;
        j["year"] = report.year;
        j["rows"] = ordered_json::array();
        for (const auto& r : report.rows) {
            j["rows"].push_back({{"appliance", r.appliance},
                                 {"monthly_final_gwh", rounded(r.monthly_final_gwh, dp_energy)},
                                 {"annual_final_gwh", rounded(r.annual_final_gwh, dp_energy)},
                                 {"primary_gwh", rounded(r.primary_gwh, dp_energy)},
                                 {"total_cost_musd", rounded(r.cost_musd.total, dp_currency)},
                                 {"subsidy_musd", rounded(r.cost_musd.subsidy, dp_currency)},
                                 {"emissions_tco2", rounded(r.emissions_tco2, dp_emissions)}});
        }
        j["total"] = {
            {"monthly_final_gwh", rounded(report.total_monthly_final_gwh, dp_energy)},
            {"annual_final_gwh", rounded(report.total_annual_final_gwh, dp_energy)},
            {"primary_gwh", rounded(report.total_primary_gwh, dp_energy)},
            {"total_cost_musd", rounded(report.total_cost_musd.total, dp_currency)},
            {"subsidy_musd", rounded(report.total_cost_musd.subsidy, dp_currency)},
            {"emissions_tco2", rounded(report.total_emissions_tco2, dp_emissions)}};
        return j.dump(2) + "\n";
    }

    // ---- household -----------------------------------------------------

    std::string emit_household_table(const HouseholdReport& report)
    {
        std::string out = "appliance: " + report.appliance + "\n\n";
        TextTable table;
        table.row({"Monthly final energy kWh", fx(report.monthly_final_kwh, dp_energy)});
        table.row({"Annual final energy kWh", fx(report.annual_final_kwh, dp_energy)});
        table.row({"User cost per year", fx(report.cost_usd.user, dp_currency)});
        table.row({"Subsidy per year", fx(report.cost_usd.subsidy, dp_currency)});
        table.row({"Total cost per year", fx(report.cost_usd.total, dp_currency)});
        return out + table.render();
    }

    const std::vector<std::string> household_header = {"appliance",     "monthly_final_kwh",
                                                       "annual_final_kwh", "user_cost_usd",
                                                       "subsidy_usd",   "total_cost_usd"};

    std::string emit_household_csv(const HouseholdReport& report)
    {
        std::string out = csv_line(household_header);
        out += csv_line({report.appliance, fx(report.monthly_final_kwh, dp_energy),
                         fx(report.annual_final_kwh, dp_energy), fx(report.cost_usd.user, dp_currency),
                         fx(report.cost_usd.subsidy, dp_currency),
                         fx(report.cost_usd.total, dp_currency)});
        return out;
    }

    std::string emit_household_structured(const HouseholdReport& report)
    {
        ordered_json j;
        j["appliance"] = report.appliance;
        j["monthly_final_kwh"] = rounded(report.monthly_final_kwh, dp_energy);
        j["annual_final_kwh"] = rounded(report.annual_final_kwh, dp_energy);
        j["user_cost_usd"] = rounded(report.cost_usd.user, dp_currency);
        j["subsidy_usd"] = rounded(report.cost_usd.subsidy, dp_currency);
        j["total_cost_usd"] = rounded(report.cost_usd.total, dp_currency);
        return j.dump(2) + "\n";
    }

    // ---- comparison ------------------------------------------------------

    struct NamedMetric {
        const char* name;
        const MetricDelta& metric;
    };

    std::vector<NamedMetric> comparison_metrics(const ComparisonReport& report)
    {
        return {{"final_energy_gwh", report.final_energy_gwh},
                {"primary_energy_gwh", report.primary_energy_gwh},
                {"total_cost_musd", report.total_cost_musd},
                {"subsidy_musd", report.subsidy_musd},
                {"emissions_tco2", report.emissions_tco2}};
    }

    std::string emit_comparison_table(const ComparisonReport& report)
    {
        std::string out = "reference: " + report.reference_name + "\n";
        out += "alternative: " + report.alternative_name + "\n\n";
        TextTable table;
        table.row({"metric", "reference", "alternative", "delta", "ratio"});
        for (const auto& m : comparison_metrics(report)) {
            table.row({m.name, fx(m.metric.reference, 2), fx(m.metric.alternative, 2),
                       fx(m.metric.delta, 2), fx(m.metric.ratio, dp_factor)});
        }
        out += table.render();
        out += "\nsubsidy_savings_musd: " + fx(report.subsidy_savings_musd, dp_currency) + "\n";
        out += "emission_reduction_tco2: " + fx(report.emission_reduction_tco2, dp_currency) + "\n";
        return out;
    }

    std::string emit_comparison_csv(const ComparisonReport& report)
    {
        std::string out = csv_line({"metric", "reference", "alternative", "delta", "ratio"});
        for (const auto& m : comparison_metrics(report)) {
            out += csv_line({m.name, fx(m.metric.reference, 2), fx(m.metric.alternative, 2),
                             fx(m.metric.delta, 2), fx(m.metric.ratio, dp_factor)});
        }
        out += csv_line({"subsidy_savings_musd", fx(report.subsidy_savings_musd, dp_currency), "", "", ""});
        out += csv_line(
            {"emission_reduction_tco2", fx(report.emission_reduction_tco2, dp_currency), "", "", ""});
        return out;
    }

    std::string emit_comparison_structured(const ComparisonReport& report)
    {
        ordered_json j;
        j["reference"] = report.reference_name;
        j["alternative"] = report.alternative_name;
        j["metrics"] = ordered_json::array();
        for (const auto& m : comparison_metrics(report)) {
            j["metrics"].push_back({{"metric", m.name},
                                    {"reference", rounded(m.metric.reference, 2)},
                                    {"alternative", rounded(m.metric.alternative, 2)},
                                    {"delta", rounded(m.metric.delta, 2)},
                                    {"ratio", rounded(m.metric.ratio, dp_factor)}});
        }
        j["subsidy_savings_musd"] = rounded(report.subsidy_savings_musd, dp_currency);
        j["emission_reduction_tco2"] = rounded(report.emission_reduction_tco2, dp_currency);
        return j.dump(2) + "\n";
    }

    // ---- affordability --------------------------------------------------

    const std::vector<std::string> affordability_header = {"appliance", "annual_user_cost_usd",
                                                           "pct_of_basket", "pct_of_wage"};

    std::vector<std::string> affordability_cells(const AffordabilityRow& r)
    {
        return {r.appliance, fx(r.annual_user_cost_usd, dp_currency), fx(r.pct_of_basket, dp_factor),
                fx(r.pct_of_wage, dp_factor)};
    }

    std::string emit_affordability_table(const AffordabilityReport& report)
    {
        std::string out = "scenario: " + report.scenario_name + "\n";
        out += "year: " + std::to_string(report.year) + "\n\n";
        TextTable table;
        table.row(affordability_header);
        for (const auto& r : report.rows) {
            table.row(affordability_cells(r));
        }
        out += table.render();
        out += "\nper_capita_subsidy_usd: " + fx(report.per_capita_subsidy_usd, dp_currency) + "\n";
        return out;
    }

    std::string emit_affordability_csv(const AffordabilityReport& report)
    {
        std::string out = csv_line(affordability_header);
        for (const auto& r : report.rows) {
            out += csv_line(affordability_cells(r));
        }
        out += csv_line({"per_capita_subsidy_usd", fx(report.per_capita_subsidy_usd, dp_currency),
                         "", ""});
        return out;
    }

    std::string emit_affordability_structured(const AffordabilityReport& report)
    {
        ordered_json j;
        j["scenario"] = report.scenario_name;
        j["year"] = report.year;
        j["rows"] = ordered_json::array();
        for (const auto& r : report.rows) {
            j["rows"].push_back({{"appliance", r.appliance},
                                 {"annual_user_cost_usd", rounded(r.annual_user_cost_usd, dp_currency)},
                                 {"pct_of_basket", rounded(r.pct_of_basket, dp_factor)},
                                 {"pct_of_wage", rounded(r.pct_of_wage, dp_factor)}});
        }
        j["per_capita_subsidy_usd"] = rounded(report.per_capita_subsidy_usd, dp_currency);
        return j.dump(2) + "\n";
    }

} // namespace

std::string format_fixed(double value, int decimals)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    std::string text = buffer;
    if (text[0] == '-' && text.find_first_not_of("0.", 1) == std::string::npos) {
        text.erase(0, 1); // -0.00 and friends read as noise
    }
    return text;
}

std::string emit(const MixReport& report, Format format)
{
    switch (format) {
    case Format::table:
        return emit_mix_table(report);
    case Format::csv:
        return emit_mix_csv(report);
    case Format::structured:
        return emit_mix_structured(report);
    }
    return {};
}

std::string emit(const NationalReport& report, Format format)
{
    switch (format) {
    case Format::table:
        return emit_national_table(report);
    case Format::csv:
        return emit_national_csv(report);
    case Format::structured:
        return emit_national_structured(report);
    }
    return {};
}

std::string emit(const HouseholdReport& report, Format format)
{
    switch (format) {
    case Format::table:
        return emit_household_table(report);
    case Format::csv:
        return emit_household_csv(report);
    case Format::structured:
        return emit_household_structured(report);
    }
    return {};
}

std::string emit(const ComparisonReport& report, Format format)
{
    switch (format) {
    case Format::table:
        return emit_comparison_table(report);
    case Format::csv:
        return emit_comparison_csv(report);
    case Format::structured:
        return emit_comparison_structured(report);
    }
    return {};
}

std::string emit(const AffordabilityReport& report, Format format)
{
    switch (format) {
    case Format::table:
        return emit_affordability_table(report);
    case Format::csv:
        return emit_affordability_csv(report);
    case Format::structured:
        return emit_affordability_structured(report);
    }
    return {};
}

} // namespace cookmodel

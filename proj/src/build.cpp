#include "cookmodel/build.hpp"

#include "cookmodel/validation.hpp"

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cookmodel {

namespace {

    class Builder {
    public:
        explicit Builder(const ScenarioDocument& doc)
            : doc_(doc)
        {
        }

        BuildResult run()
        {
            for (const auto& section : doc_.sections) {
                if (section.name == "scenario") {
                    read_scenario(section);
                } else if (section.name == "source") {
                    read_source(section);
                } else if (section.name == "fuel") {
                    read_fuel(section);
                } else if (section.name == "tariff") {
                    read_tariff(section);
                } else if (section.name == "appliance") {
                    read_appliance(section);
                } else if (section.name == "demographics") {
                    read_demographics(section);
                }
            }

            require_section("tariff", saw_tariff_);
            require_section("demographics", saw_demographics_);
            if (scenario_.mix.sources.empty()) {
                error("missing-section", "at least one [[source]] section is required", {});
            }
            if (scenario_.appliances.empty()) {
                error("missing-section", "at least one [[appliance]] section is required", {});
            }

            cross_checks();

            BuildResult result;
            result.diagnostics = std::move(diagnostics_);
            for (const auto& d : result.diagnostics) {
                if (d.severity == Severity::error) {
                    return result;
                }
            }

            scenario_.mix.year = scenario_.year;
            try {
                validate(scenario_); // safety net for anything the checks above missed
            } catch (const ValidationError& e) {
                result.diagnostics.push_back({Severity::error, "invalid-scenario", e.what(), {}, {}});
                return result;
            }
            result.scenario = std::move(scenario_);
            return result;
        }

    private:
        // ---- diagnostic helpers -------------------------------------

        void error(std::string code, std::string message, Position pos, std::string hint = {})
        {
            diagnostics_.push_back({Severity::error, std::move(code), std::move(message), pos, std::move(hint)});
        }

        void warn(std::string code, std::string message, Position pos)
        {
            diagnostics_.push_back({Severity::warning, std::move(code), std::move(message), pos, {}});
        }

        void require_section(std::string_view name, bool present)
        {
            if (!present) {
                error("missing-section", "required section [" + std::string(name) + "] is missing", {});
            }
        }

        // ---- typed entry access -------------------------------------

        struct Keys {
            const Section& section;
            Builder& builder;
            std::set<std::string> known;

            const Entry* find(std::string_view key)
            {
                known.insert(std::string(key));
                for (const auto& e : section.entries) {
                    if (e.key == key) {
                        return &e;
                    }
                }
                return nullptr;
            }

            const Entry* require(std::string_view key)
            {
                const Entry* e = find(key);
                if (!e) {
                    builder.error("missing-key",
                                  "section [" + section.name + "] is missing required key '"
                                      + std::string(key) + "'",
                                  section.pos);
                }
                return e;
            }

            /// Call last: everything not looked up is unknown.
            void finish()
            {
                for (const auto& e : section.entries) {
                    if (!known.contains(e.key)) {
                        builder.warn("unknown-key",
                                     "unknown key '" + e.key + "' in section [" + section.name + "]",
                                     e.pos);
                    }
                }
            }
        };

        bool number_of(const Entry& entry, double& out)
        {
            if (entry.value.kind != Value::Kind::number) {
                error("expected-number", "expected number for key '" + entry.key + "'",
                      entry.value.pos);
                return false;
            }
            out = entry.value.number;
            return true;
        }

        bool integer_of(const Entry& entry, std::int64_t& out)
        {
            double v = 0.0;
            if (!number_of(entry, v)) {
                return false;
            }
            if (std::floor(v) != v || std::abs(v) > 9.0e15) {
                error("expected-integer", "expected integer for key '" + entry.key + "'",
                      entry.value.pos);
                return false;
            }
            out = static_cast<std::int64_t>(v);
            return true;
        }

        bool string_of(const Entry& entry, std::string& out)
        {
            if (entry.value.kind != Value::Kind::string) {
                error("expected-string", "expected string for key '" + entry.key + "'",
                      entry.value.pos);
                return false;
            }
            out = entry.value.text;
            return true;
        }

        bool positive(const Entry& entry, double v)
        {
            if (v <= 0.0) {
                error("out-of-range", "'" + entry.key + "' must be positive", entry.value.pos);
                return false;
            }
            return true;
        }

        bool non_negative(const Entry& entry, double v)
        {
            if (v < 0.0) {
                error("out-of-range", "'" + entry.key + "' must not be negative", entry.value.pos);
                return false;
            }
            return true;
        }

        // ---- section readers ----------------------------------------

        void read_scenario(const Section& section)
        {
            Keys keys{section, *this, {}};
            if (const Entry* e = keys.find("name")) {
                string_of(*e, scenario_.name);
            }
            if (const Entry* e = keys.find("year")) {
                std::int64_t year = 0;
                if (integer_of(*e, year)) {
                    scenario_.year = static_cast<int>(year);
                }
            }
            keys.finish();
        }

        void read_source(const Section& section)
        {
            Keys keys{section, *this, {}};
            EnergySource source;
            if (const Entry* e = keys.require("name")) {
                if (string_of(*e, source.name) && !source_names_.insert(source.name).second) {
                    error("duplicate-name", "duplicate source name '" + source.name + "'",
                          e->value.pos);
                }
            }
            if (const Entry* e = keys.require("energy_mwh")) {
                if (number_of(*e, source.energy_mwh)) {
                    non_negative(*e, source.energy_mwh);
                }
            }
            if (const Entry* e = keys.require("primary_factor")) {
                if (number_of(*e, source.primary_factor)) {
                    positive(*e, source.primary_factor);
                }
            }
            if (const Entry* e = keys.require("emission_factor")) {
                if (number_of(*e, source.emission_factor)) {
                    non_negative(*e, source.emission_factor);
                }
            }
            keys.finish();
            scenario_.mix.sources.push_back(std::move(source));
        }

        void read_fuel(const Section& section)
        {
            Keys keys{section, *this, {}};
            FuelEntry fuel;
            if (const Entry* e = keys.require("name")) {
                if (string_of(*e, fuel.spec.name) && !fuel_names_.insert(fuel.spec.name).second) {
                    error("duplicate-name", "duplicate fuel name '" + fuel.spec.name + "'",
                          e->value.pos);
                }
            }
            read_positive(keys, "primary_factor", fuel.spec.primary_factor);
            read_positive(keys, "emission_factor", fuel.spec.emission_factor_final);
            read_positive(keys, "cylinder_kg", fuel.spec.cylinder_kg);
            read_positive(keys, "monthly_kg_per_household", fuel.spec.monthly_kg_per_household);
            read_positive(keys, "user_price_per_cylinder", fuel.pricing.user_price_per_cylinder);
            read_positive(keys, "full_cost_per_cylinder", fuel.pricing.full_cost_per_cylinder);
            if (const Entry* e = keys.find("energy_basis_note")) {
                string_of(*e, fuel.spec.energy_basis_note);
            }
            keys.finish();
            scenario_.fuels.push_back(std::move(fuel));
        }

        void read_positive(Keys& keys, std::string_view key, double& out)
        {
            if (const Entry* e = keys.require(key)) {
                if (number_of(*e, out)) {
                    positive(*e, out);
                }
            }
        }

        void read_tariff(const Section& section)
        {
            saw_tariff_ = true;
            Keys keys{section, *this, {}};
            if (const Entry* e = keys.require("production_cost_per_kwh")) {
                if (number_of(*e, scenario_.tariff.production_cost_per_kwh)) {
                    non_negative(*e, scenario_.tariff.production_cost_per_kwh);
                }
            }
            keys.known.insert("block");

            std::vector<Position> block_positions;
            for (const auto& entry : section.entries) {
                if (entry.key != "block") {
                    continue;
                }
                read_block(entry);
                block_positions.push_back(entry.value.pos);
            }
            if (scenario_.tariff.blocks.empty()) {
                error("missing-key", "section [tariff] needs at least one block line", section.pos);
            } else {
                check_blocks(block_positions);
            }
            keys.finish();
        }

        void read_block(const Entry& entry)
        {
            const Value& v = entry.value;
            if (v.kind != Value::Kind::list || v.items.size() != 2) {
                error("malformed-block",
                      "block takes two values: an upper bound (or inf) and a rate", v.pos);
                return;
            }
            TariffBlock block;
            const Value& bound = v.items[0];
            if (bound.kind == Value::Kind::number) {
                block.upper_bound_kwh = bound.number;
            } else if (bound.kind != Value::Kind::unbounded) {
                error("expected-number", "expected number or inf for the block bound", bound.pos);
                return;
            }
            const Value& rate = v.items[1];
            if (rate.kind != Value::Kind::number) {
                error("expected-number", "expected number for the block rate", rate.pos);
                return;
            }
            block.rate_per_kwh = rate.number;
            if (block.rate_per_kwh < 0.0) {
                error("out-of-range", "block rate must not be negative", rate.pos);
                return;
            }
            scenario_.tariff.blocks.push_back(block);
        }

        void check_blocks(const std::vector<Position>& positions)
        {
            const auto& blocks = scenario_.tariff.blocks;
            double previous = 0.0;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                const bool last = i + 1 == blocks.size();
                const Position pos = i < positions.size() ? positions[i] : Position{};
                if (!blocks[i].upper_bound_kwh.has_value()) {
                    if (!last) {
                        error("block-order", "only the last block may be unbounded", pos);
                        return;
                    }
                    continue;
                }
                if (last) {
                    error("block-order", "the last block must be unbounded (inf)", pos);
                    return;
                }
                if (*blocks[i].upper_bound_kwh <= previous) {
                    error("block-order", "blocks must be strictly increasing", pos);
                    return;
                }
                previous = *blocks[i].upper_bound_kwh;
            }
        }

        void read_appliance(const Section& section)
        {
            Keys keys{section, *this, {}};
            ApplianceProfile appliance;
            if (const Entry* e = keys.require("name")) {
                if (string_of(*e, appliance.name) && !appliance_names_.insert(appliance.name).second) {
                    error("duplicate-name", "duplicate appliance name '" + appliance.name + "'",
                          e->value.pos);
                }
            }
            if (const Entry* e = keys.require("carrier")) {
                std::string carrier;
                if (string_of(*e, carrier)) {
                    if (carrier == "electricity") {
                        appliance.carrier = Carrier::electricity;
                    } else if (carrier.starts_with("fuel:") && carrier.size() > 5) {
                        appliance.carrier = Carrier::fuel;
                        appliance.fuel_name = carrier.substr(5);
                        fuel_refs_.push_back({appliance.fuel_name, e->value.pos});
                    } else {
                        error("bad-carrier",
                              "carrier must be \"electricity\" or \"fuel:<name>\", got \"" + carrier
                                  + "\"",
                              e->value.pos);
                    }
                }
            }
            if (const Entry* e = keys.require("monthly_final_kwh")) {
                if (number_of(*e, appliance.monthly_final_kwh)) {
                    non_negative(*e, appliance.monthly_final_kwh);
                }
            }
            if (const Entry* e = keys.require("count")) {
                if (integer_of(*e, appliance.count) && appliance.count < 0) {
                    error("out-of-range", "'count' must not be negative", e->value.pos);
                }
            }
            keys.finish();
            scenario_.appliances.push_back(std::move(appliance));
        }

        void read_demographics(const Section& section)
        {
            saw_demographics_ = true;
            demographics_pos_ = section.pos;
            Keys keys{section, *this, {}};
            Demographics& d = scenario_.demographics;
            read_positive(keys, "population", d.population);
            if (const Entry* e = keys.require("households")) {
                if (integer_of(*e, d.households) && d.households <= 0) {
                    error("out-of-range", "'households' must be positive", e->value.pos);
                }
            }
            read_positive(keys, "minimum_wage", d.minimum_wage);
            read_positive(keys, "basic_basket", d.basic_basket);
            if (const Entry* e = keys.find("avg_household_size")) {
                double size = 0.0;
                if (number_of(*e, size) && positive(*e, size)) {
                    d.avg_household_size = size;
                }
            }
            keys.finish();
        }

        // ---- whole-document checks ----------------------------------

        void cross_checks()
        {
            for (const auto& [name, pos] : fuel_refs_) {
                if (!fuel_names_.contains(name)) {
                    error("unknown-fuel", "appliance refers to unknown fuel '" + name + "'", pos);
                }
            }

            if (!saw_demographics_ || scenario_.appliances.empty()
                || scenario_.demographics.households <= 0) {
                return; // partition check needs both sides intact
            }
            std::int64_t total = 0;
            for (const auto& a : scenario_.appliances) {
                total += a.count;
            }
            if (total != scenario_.demographics.households) {
                error("count-partition",
                      "appliance counts sum to " + std::to_string(total) + " but households is "
                          + std::to_string(scenario_.demographics.households),
                      demographics_pos_,
                      "every household must be covered by exactly one appliance");
            }
        }

        const ScenarioDocument& doc_;
        Scenario scenario_;
        std::vector<Diagnostic> diagnostics_;
        std::set<std::string> source_names_;
        std::set<std::string> fuel_names_;
        std::set<std::string> appliance_names_;
        std::vector<std::pair<std::string, Position>> fuel_refs_;
        bool saw_tariff_ = false;
        bool saw_demographics_ = false;
        Position demographics_pos_;
    };

} // namespace

BuildResult build_scenario(const ScenarioDocument& doc)
{
    return Builder(doc).run();
}

} // namespace cookmodel

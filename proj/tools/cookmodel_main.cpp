#include "cookmodel/build.hpp"
#include "cookmodel/document.hpp"
#include "cookmodel/emit.hpp"
#include "cookmodel/validation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

namespace {

using namespace cookmodel;

bool use_color()
{
    static const bool enabled = isatty(fileno(stderr)) != 0
        && std::getenv("COOKMODEL_NO_COLOR") == nullptr;
    return enabled;
}

const char* severity_label(Severity severity)
{
    if (severity == Severity::error) {
        return use_color() ? "\033[31merror\033[0m" : "error";
    }
    return use_color() ? "\033[35mwarning\033[0m" : "warning";
}

void print_diagnostic(const std::string& file, const Diagnostic& d)
{
    std::cerr << file;
    if (d.pos.line > 0) {
        std::cerr << ':' << d.pos.line << ':' << d.pos.column;
    }
    std::cerr << ": " << severity_label(d.severity) << ": " << d.message << '\n';
    if (!d.hint.empty()) {
        std::cerr << "  hint: " << d.hint << '\n';
    }
}

/// Prints every diagnostic; returns true when none is an error.
bool report_diagnostics(const std::string& file, const std::vector<Diagnostic>& diagnostics)
{
    bool ok = true;
    for (const auto& d : diagnostics) {
        print_diagnostic(file, d);
        if (d.severity == Severity::error) {
            ok = false;
        }
    }
    return ok;
}

std::optional<std::string> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        return std::nullopt;
    }
    return buffer.str();
}

/// Loads, parses, and builds one scenario file. On failure prints
/// diagnostics and sets the exit code (2 unreadable, 1 invalid).
std::optional<Scenario> load_scenario(const std::string& path, int& exit_code)
{
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "cannot read file '" << path << "'\n";
        exit_code = 2;
        return std::nullopt;
    }
    ParseResult parsed = parse(*text);
    if (!report_diagnostics(path, parsed.diagnostics)) {
        exit_code = 1;
        return std::nullopt;
    }
    BuildResult built = build_scenario(parsed.document);
    if (!report_diagnostics(path, built.diagnostics) || !built.ok()) {
        exit_code = 1;
        return std::nullopt;
    }
    return std::move(built.scenario);
}

int write_output(const std::string& text, const std::string& output_path)
{
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "cannot write file '" << output_path << "'\n";
        return 2;
    }
    return 0;
}

Format parse_format(const std::string& name)
{
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "structured") {
        return Format::structured;
    }
    return Format::table;
}

int run_command(const std::string& path, const std::string& report_selector,
                const std::string& format_name, const std::string& output_path)
{
    std::string household_appliance;
    const bool household = report_selector.rfind("household:", 0) == 0;
    if (household) {
        household_appliance = report_selector.substr(10);
    }
    if (!household && report_selector != "national" && report_selector != "mix"
        && report_selector != "affordability") {
        std::cerr << "unknown report '" << report_selector
                  << "' (use national, household:<appliance>, mix, or affordability)\n";
        return 2;
    }
    if (household && household_appliance.empty()) {
        std::cerr << "household report needs an appliance name: household:<appliance>\n";
        return 2;
    }

    int exit_code = 0;
    const auto scenario = load_scenario(path, exit_code);
    if (!scenario) {
        return exit_code;
    }
    const Format format = parse_format(format_name);
    try {
        std::string text;
        if (household) {
            text = emit(household_report(*scenario, household_appliance), format);
        } else if (report_selector == "national") {
            text = emit(evaluate(*scenario), format);
        } else if (report_selector == "mix") {
            text = emit(mix_report(scenario->mix), format);
        } else {
            text = emit(affordability_report(*scenario), format);
        }
        return write_output(text, output_path);
    } catch (const ValidationError& e) {
        std::cerr << path << ": error: " << e.what() << '\n';
        return 1;
    }
}

int compare_command(const std::string& reference_path, const std::string& alternative_path,
                    const std::string& format_name, const std::string& output_path)
{
    int exit_code = 0;
    const auto reference = load_scenario(reference_path, exit_code);
    if (!reference) {
        return exit_code;
    }
    const auto alternative = load_scenario(alternative_path, exit_code);
    if (!alternative) {
        return exit_code;
    }
    try {
        return write_output(emit(compare(*reference, *alternative), parse_format(format_name)),
                            output_path);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy scenario calculator: evaluate cooking-energy scenarios, "
                 "compare policies, and print mix, national, household, and "
                 "affordability reports."};
    app.require_subcommand(1);

    const std::string format_help = "output format: table, csv, or structured";
    const std::vector<std::string> formats = {"table", "csv", "structured"};

    auto* validate_cmd = app.add_subcommand("validate", "parse and check a scenario file");
    std::string validate_path;
    validate_cmd->add_option("file", validate_path, "scenario file")->required();

    auto* run_cmd = app.add_subcommand("run", "evaluate one scenario and print a report");
    std::string run_path;
    std::string run_report;
    std::string run_format = "table";
    std::string run_output;
    run_cmd->add_option("file", run_path, "scenario file")->required();
    run_cmd->add_option("--report", run_report,
                        "report: national, household:<appliance>, mix, affordability")
        ->required();
    run_cmd->add_option("--format", run_format, format_help)->transform(CLI::IsMember(formats));
    run_cmd->add_option("-o,--output", run_output, "write to a file instead of standard output");

    auto* compare_cmd = app.add_subcommand(
        "compare", "evaluate two scenarios; deltas and ratios are alternative relative to "
                   "reference, savings and reductions are reference minus alternative");
    std::string compare_reference;
    std::string compare_alternative;
    std::string compare_format = "table";
    std::string compare_output;
    compare_cmd->add_option("reference", compare_reference, "reference scenario file")->required();
    compare_cmd->add_option("alternative", compare_alternative, "alternative scenario file")
        ->required();
    compare_cmd->add_option("--format", compare_format, format_help)
        ->transform(CLI::IsMember(formats));
    compare_cmd->add_option("-o,--output", compare_output,
                            "write to a file instead of standard output");

    auto* mix_cmd = app.add_subcommand("mix", "print the generation-mix report for a scenario");
    std::string mix_path;
    std::string mix_format = "table";
    mix_cmd->add_option("file", mix_path, "scenario file")->required();
    mix_cmd->add_option("--format", mix_format, format_help)->transform(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems exit 2, help exits 0
    }

    if (*validate_cmd) {
        int exit_code = 0;
        if (!load_scenario(validate_path, exit_code)) {
            return exit_code;
        }
        return 0;
    }
    if (*run_cmd) {
        return run_command(run_path, run_report, run_format, run_output);
    }
    if (*compare_cmd) {
        return compare_command(compare_reference, compare_alternative, compare_format,
                               compare_output);
    }
    return run_command(mix_path, "mix", mix_format, "");
}

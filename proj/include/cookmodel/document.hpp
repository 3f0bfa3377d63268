#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cookmodel {

/// 1-based line and column into the source text.
struct Position {
    int line = 0;
    int column = 0;
};

enum class Severity {
    error,
    warning,
};

struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;    // stable machine-readable tag, e.g. "malformed-number"
    std::string message;
    Position pos;
    std::string hint; // optional, empty when absent
};

/// A parsed scalar or inline list. Numbers keep their source lexeme so the
/// canonical emitter can round-trip them byte-for-byte.
struct Value {
    enum class Kind {
        number,
        string,
        unbounded, // the `inf` keyword in tariff block lines
        list,
    };
    Kind kind = Kind::number;
    double number = 0.0;
    std::string text; // string content (unescaped) or number lexeme
    std::vector<Value> items;
    Position pos;
};

struct Entry {
    std::string key;
    Value value;
    Position pos;
};

/// One `[name]` or `[[name]]` section with its entries in source order.
struct Section {
    std::string name;
    bool repeatable = false; // written with double brackets
    std::vector<Entry> entries;
    Position pos;
};

struct ScenarioDocument {
    std::vector<Section> sections;
};

struct ParseResult {
    ScenarioDocument document;
    std::vector<Diagnostic> diagnostics;

    bool ok() const
    {
        for (const auto& d : diagnostics) {
            if (d.severity == Severity::error) {
                return false;
            }
        }
        return true;
    }
};

/// Parse scenario text. Syntax errors are collected per line; the document
/// contains everything that parsed cleanly.
ParseResult parse(std::string_view text);

/// Canonical text for a document; parsing it back yields a structurally
/// equal document.
std::string to_text(const ScenarioDocument& doc);

/// Structural equality: section order/names/forms, entry keys, value kinds
/// and contents. Positions are ignored.
bool structurally_equal(const ScenarioDocument& a, const ScenarioDocument& b);

} // namespace cookmodel

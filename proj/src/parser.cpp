#include "cookmodel/document.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>

namespace cookmodel {

namespace {

    // ------------------------------------------------------------------
    // section-name inventory
    // ------------------------------------------------------------------

    struct SectionKind {
        const char* name;
        bool repeatable;
    };

    constexpr std::array<SectionKind, 6> known_sections = {{
        {"scenario", false},
        {"source", true},
        {"fuel", true},
        {"tariff", false},
        {"appliance", true},
        {"demographics", false},
    }};

    const SectionKind* find_section_kind(std::string_view name)
    {
        for (const auto& k : known_sections) {
            if (name == k.name) {
                return &k;
            }
        }
        return nullptr;
    }

    std::string known_section_list()
    {
        std::string out;
        for (const auto& k : known_sections) {
            if (!out.empty()) {
                out += ", ";
            }
            out += k.name;
        }
        return out;
    }

    bool is_ident_start(char c)
    {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool is_ident_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    // ------------------------------------------------------------------
    // line scanner
    // ------------------------------------------------------------------

    class LineScanner {
    public:
        LineScanner(std::string_view line, int line_no)
            : line_(line)
            , line_no_(line_no)
        {
        }

        Position pos() const { return {line_no_, static_cast<int>(i_) + 1}; }

        void skip_ws()
        {
            while (i_ < line_.size() && (line_[i_] == ' ' || line_[i_] == '\t' || line_[i_] == '\r')) {
                ++i_;
            }
        }

        /// True once only whitespace or a comment remains.
        bool at_end()
        {
            skip_ws();
            return i_ >= line_.size() || line_[i_] == '#';
        }

        char peek() const { return i_ < line_.size() ? line_[i_] : '\0'; }

        bool consume(char c)
        {
            if (peek() == c) {
                ++i_;
                return true;
            }
            return false;
        }

        std::string take_identifier()
        {
            std::string word;
            while (i_ < line_.size() && is_ident_char(line_[i_])) {
                word += line_[i_++];
            }
            return word;
        }

        /// Number token: optional sign, digits, optional '.' digits.
        /// Returns false (and eats the rest of the token) when malformed.
        bool take_number(std::string& lexeme)
        {
            lexeme.clear();
            if (peek() == '+' || peek() == '-') {
                lexeme += line_[i_++];
            }
            std::size_t digits = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                lexeme += line_[i_++];
                ++digits;
            }
            bool ok = digits > 0;
            if (peek() == '.') {
                lexeme += line_[i_++];
                std::size_t frac = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    lexeme += line_[i_++];
                    ++frac;
                }
                ok = ok && frac > 0;
            }
            // token must end at a delimiter; exponents and separators are out
            while (i_ < line_.size() && !strchr_delim(line_[i_])) {
                lexeme += line_[i_++];
                ok = false;
            }
            return ok;
        }

        /// String token; the opening quote is already consumed.
        /// The only escape is \" (a literal backslash elsewhere stands for itself).
        bool take_string(std::string& content)
        {
            content.clear();
            while (i_ < line_.size()) {
                char c = line_[i_];
                if (c == '"') {
                    ++i_;
                    return true;
                }
                if (c == '\\' && i_ + 1 < line_.size() && line_[i_ + 1] == '"') {
                    content += '"';
                    i_ += 2;
                    continue;
                }
                content += c;
                ++i_;
            }
            return false; // ran off the end of the line
        }

    private:
        static bool strchr_delim(char c)
        {
            return c == ' ' || c == '\t' || c == '\r' || c == ',' || c == '#' || c == ']';
        }

        std::string_view line_;
        int line_no_;
        std::size_t i_ = 0;
    };

    // ------------------------------------------------------------------
    // parser proper
    // ------------------------------------------------------------------

    class Parser {
    public:
        explicit Parser(std::string_view text)
            : text_(text)
        {
        }

        ParseResult run()
        {
            int line_no = 0;
            std::size_t start = 0;
            while (start <= text_.size()) {
                std::size_t end = text_.find('\n', start);
                std::string_view line = text_.substr(
                    start, end == std::string_view::npos ? text_.size() - start : end - start);
                ++line_no;
                parse_line(line, line_no);
                if (end == std::string_view::npos) {
                    break;
                }
                start = end + 1;
            }
            return {std::move(doc_), std::move(diagnostics_)};
        }

    private:
        void error(std::string code, std::string message, Position pos, std::string hint = {})
        {
            diagnostics_.push_back({Severity::error, std::move(code), std::move(message), pos, std::move(hint)});
        }

        void parse_line(std::string_view line, int line_no)
        {
            LineScanner scan(line, line_no);
            if (scan.at_end()) {
                return;
            }
            if (scan.peek() == '[') {
                parse_section_header(scan);
            } else if (is_ident_start(scan.peek())) {
                parse_entry(scan);
            } else {
                error("expected-entry",
                      std::string("expected a section header or key = value, found '") + scan.peek() + "'",
                      scan.pos());
            }
        }

        void parse_section_header(LineScanner& scan)
        {
            const Position header_pos = scan.pos();
            scan.consume('[');
            const bool repeatable = scan.consume('[');
            scan.skip_ws();
            const Position name_pos = scan.pos();
            const std::string name = scan.take_identifier();
            if (name.empty()) {
                error("expected-section-name", "expected a section name after '['", name_pos);
                return;
            }
            scan.skip_ws();
            if (!scan.consume(']') || (repeatable && !scan.consume(']'))) {
                error("unterminated-section-header",
                      "section header '" + name + "' is missing its closing bracket", scan.pos());
                return;
            }
            if (!scan.at_end()) {
                error("trailing-characters", "unexpected text after section header", scan.pos());
                return;
            }

            const SectionKind* kind = find_section_kind(name);
            if (!kind) {
                error("unknown-section", "unknown section '" + name + "'", name_pos,
                      "known sections: " + known_section_list());
                in_broken_section_ = true;
                return;
            }
            if (kind->repeatable != repeatable) {
                error("section-form",
                      kind->repeatable
                          ? "'" + name + "' is a repeatable section, write [[" + name + "]]"
                          : "'" + name + "' is a unique section, write [" + name + "]",
                      name_pos);
                in_broken_section_ = true;
                return;
            }
            if (!kind->repeatable) {
                for (const auto& s : doc_.sections) {
                    if (s.name == name) {
                        error("duplicate-section", "section '" + name + "' appears more than once",
                              name_pos);
                        in_broken_section_ = true;
                        return;
                    }
                }
            }
            in_broken_section_ = false;
            doc_.sections.push_back({name, repeatable, {}, header_pos});
        }

        void parse_entry(LineScanner& scan)
        {
            const Position key_pos = scan.pos();
            const std::string key = scan.take_identifier();
            scan.skip_ws();
            if (!scan.consume('=')) {
                error("expected-equals", "expected '=' after key '" + key + "'", scan.pos());
                return;
            }
            scan.skip_ws();

            std::vector<Value> values;
            while (true) {
                Value v;
                if (!parse_value(scan, v)) {
                    return; // diagnostic already emitted
                }
                values.push_back(std::move(v));
                scan.skip_ws();
                if (!scan.consume(',')) {
                    break;
                }
                scan.skip_ws();
            }
            if (!scan.at_end()) {
                error("trailing-characters", "unexpected text after value", scan.pos());
                return;
            }

            Value value;
            if (values.size() == 1) {
                value = std::move(values.front());
            } else {
                value.kind = Value::Kind::list;
                value.pos = values.front().pos;
                value.items = std::move(values);
            }

            if (in_broken_section_) {
                return; // entries of an unknown/misformed section are dropped silently
            }
            if (doc_.sections.empty()) {
                error("entry-outside-section", "key '" + key + "' appears before any section header",
                      key_pos);
                return;
            }
            Section& section = doc_.sections.back();
            if (key != "block") { // block lines are the one repeatable entry form
                for (const auto& e : section.entries) {
                    if (e.key == key) {
                        error("duplicate-key",
                              "duplicate key '" + key + "' in section '" + section.name + "'", key_pos);
                        return;
                    }
                }
            }
            section.entries.push_back({key, std::move(value), key_pos});
        }

        bool parse_value(LineScanner& scan, Value& out)
        {
            out.pos = scan.pos();
            const char c = scan.peek();
            if (c == '"') {
                scan.consume('"');
                out.kind = Value::Kind::string;
                if (!scan.take_string(out.text)) {
                    error("unterminated-string", "unterminated string", out.pos);
                    return false;
                }
                return true;
            }
            if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
                out.kind = Value::Kind::number;
                if (!scan.take_number(out.text)) {
                    error("malformed-number", "malformed number '" + out.text + "'", out.pos,
                          "numbers are plain decimals: optional sign, digits, optional fraction");
                    return false;
                }
                const char* first = out.text.data();
                const char* last = first + out.text.size();
                if (*first == '+') {
                    ++first; // from_chars rejects a leading plus
                }
                std::from_chars(first, last, out.number);
                return true;
            }
            if (is_ident_start(c)) {
                const Position word_pos = scan.pos();
                const std::string word = scan.take_identifier();
                if (word == "inf") {
                    out.kind = Value::Kind::unbounded;
                    out.text = word;
                    return true;
                }
                error("expected-value", "expected a number, string, or inf, found '" + word + "'",
                      word_pos);
                return false;
            }
            error("expected-value",
                  c == '\0' || c == '#' ? "expected a value" : std::string("expected a value, found '") + c + "'",
                  scan.pos());
            return false;
        }

        std::string_view text_;
        ScenarioDocument doc_;
        std::vector<Diagnostic> diagnostics_;
        bool in_broken_section_ = false;
    };

    void append_value(std::string& out, const Value& v)
    {
        switch (v.kind) {
        case Value::Kind::number:
            out += v.text;
            break;
        case Value::Kind::string:
            out += '"';
            for (char c : v.text) {
                if (c == '"') {
                    out += '\\';
                }
                out += c;
            }
            out += '"';
            break;
        case Value::Kind::unbounded:
            out += "inf";
            break;
        case Value::Kind::list:
            for (std::size_t i = 0; i < v.items.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                append_value(out, v.items[i]);
            }
            break;
        }
    }

    bool values_equal(const Value& a, const Value& b)
    {
        if (a.kind != b.kind) {
            return false;
        }
        switch (a.kind) {
        case Value::Kind::number:
            return a.text == b.text;
        case Value::Kind::string:
            return a.text == b.text;
        case Value::Kind::unbounded:
            return true;
        case Value::Kind::list:
            if (a.items.size() != b.items.size()) {
                return false;
            }
            for (std::size_t i = 0; i < a.items.size(); ++i) {
                if (!values_equal(a.items[i], b.items[i])) {
                    return false;
                }
            }
            return true;
        }
        return false;
    }

} // namespace

ParseResult parse(std::string_view text)
{
    return Parser(text).run();
}

std::string to_text(const ScenarioDocument& doc)
{
    std::string out;
    for (std::size_t i = 0; i < doc.sections.size(); ++i) {
        const Section& s = doc.sections[i];
        if (i > 0) {
            out += '\n';
        }
        out += s.repeatable ? "[[" + s.name + "]]" : "[" + s.name + "]";
        out += '\n';
        for (const auto& e : s.entries) {
            out += e.key;
            out += " = ";
            append_value(out, e.value);
            out += '\n';
        }
    }
    return out;
}

bool structurally_equal(const ScenarioDocument& a, const ScenarioDocument& b)
{
    if (a.sections.size() != b.sections.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.sections.size(); ++i) {
        const Section& sa = a.sections[i];
        const Section& sb = b.sections[i];
        if (sa.name != sb.name || sa.repeatable != sb.repeatable
            || sa.entries.size() != sb.entries.size()) {
            return false;
        }
        for (std::size_t j = 0; j < sa.entries.size(); ++j) {
            if (sa.entries[j].key != sb.entries[j].key
                || !values_equal(sa.entries[j].value, sb.entries[j].value)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace cookmodel

#include "osculant/config.hpp"

#include <cctype>
#include <map>
#include <set>

namespace osc {

ConfigError::ConfigError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("config error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

struct RawValue {
    std::vector<ConfigItem> items;
    bool is_array = false;
    SourceLocation where;
};

using Section = std::map<std::string, RawValue>;

class ConfigReader {
public:
    explicit ConfigReader(std::string_view text) : text_(text) {}

    std::map<std::string, std::pair<Section, SourceLocation>> read() {
        std::map<std::string, std::pair<Section, SourceLocation>> sections;
        Section* current = nullptr;
        for (;;) {
            skip_blank_lines();
            if (at_end()) break;
            const SourceLocation here = location();
            if (peek() == '[') {
                ++pos_;
                skip_inline_space();
                const std::string name = read_identifier();
                skip_inline_space();
                expect(']');
                end_of_line();
                if (name != "variety" && name != "fiber") throw ConfigError(here.line, here.column, "unknown section [" + name + "]");
                auto [it, inserted] = sections.try_emplace(name, Section{}, here);
                if (!inserted) throw ConfigError(here.line, here.column, "duplicate section [" + name + "]");
                current = &it->second.first;
                continue;
            }
            if (!current) throw ConfigError(here.line, here.column, "key outside of a section");
            const std::string key = read_identifier();
            skip_inline_space();
            expect('=');
            skip_inline_space();
            RawValue value = read_value();
            end_of_line();
            if (!current->try_emplace(key, std::move(value)).second)
                throw ConfigError(here.line, here.column, "duplicate key '" + key + "'");
        }
        return sections;
    }

private:
    RawValue read_value() {
        RawValue value;
        value.where = location();
        if (peek() == '[') {
            value.is_array = true;
            ++pos_;
            skip_space_and_comments();
            if (peek() == ']') {
                ++pos_;
                return value;
            }
            for (;;) {
                skip_space_and_comments();
                value.items.push_back(read_string());
                skip_space_and_comments();
                if (peek() == ',') {
                    ++pos_;
                    skip_space_and_comments();
                    if (peek() == ']') {
                        ++pos_;
                        return value;
                    }
                    continue;
                }
                expect(']');
                return value;
            }
        }
        value.items.push_back(read_string());
        return value;
    }

    ConfigItem read_string() {
        const SourceLocation start = location();
        if (peek() != '"') fail("expected a double-quoted string");
        ++pos_;
        ConfigItem item;
        item.where = location();
        while (!at_end() && peek() != '"') {
            if (peek() == '\n') fail("unterminated string");
            if (peek() == '\\') fail("escape sequences are not supported");
            item.text += text_[pos_++];
        }
        if (at_end()) throw ConfigError(start.line, start.column, "unterminated string");
        ++pos_;
        return item;
    }

    std::string read_identifier() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void end_of_line() {
        skip_inline_space();
        if (peek() == '#')
            while (!at_end() && peek() != '\n') ++pos_;
        if (at_end()) return;
        if (peek() != '\n') fail("unexpected text after value");
        ++pos_;
    }

    void skip_inline_space() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
    }

    void skip_space_and_comments() {
        for (;;) {
            while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
            if (peek() != '#') return;
            while (!at_end() && peek() != '\n') ++pos_;
        }
    }

    void skip_blank_lines() { skip_space_and_comments(); }

    [[noreturn]] void fail(const std::string& message) const {
        const auto here = location();
        throw ConfigError(here.line, here.column, message);
    }

    SourceLocation location() const {
        SourceLocation loc{1, 1};
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++loc.line;
                loc.column = 1;
            } else {
                ++loc.column;
            }
        }
        return loc;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

const RawValue& required(const Section& section, const std::string& key, SourceLocation where,
                         const std::string& section_name, bool array) {
    const auto it = section.find(key);
    if (it == section.end())
        throw ConfigError(where.line, where.column, "[" + section_name + "] is missing '" + key + "'");
    if (it->second.is_array != array)
        throw ConfigError(it->second.where.line, it->second.where.column,
                          "'" + key + "' must be " + (array ? "an array of strings" : "a string"));
    return it->second;
}

void reject_unknown_keys(const Section& section, const std::set<std::string>& known) {
    for (const auto& [key, value] : section)
        if (!known.contains(key))
            throw ConfigError(value.where.line, value.where.column, "unknown key '" + key + "'");
}

std::vector<std::string> names_of(const std::vector<ConfigItem>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        if (!is_valid_identifier(item.text))
            throw ConfigError(item.where.line, item.where.column, "'" + item.text + "' is not a valid variable name");
        out.push_back(item.text);
    }
    return out;
}

Polynomial parse_item(const ConfigItem& item, const std::vector<std::string>& vars) {
    try {
        return parse_polynomial(item.text, vars);
    } catch (const ParseError& e) {
        // Strings never contain newlines, so the offset maps onto the column.
        throw ConfigError(item.where.line, item.where.column + e.position(), e.detail());
    }
}

std::string quoted_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", \"" : "\"") + items[i] + "\"";
    return out + "]";
}

} // namespace

VarietyConfig parse_config(std::string_view text) {
    auto sections = ConfigReader(text).read();
    const auto variety = sections.find("variety");
    if (variety == sections.end()) throw ConfigError(1, 1, "missing [variety] section");
    const auto& [section, where] = variety->second;
    reject_unknown_keys(section, {"name", "params", "coords"});

    VarietyConfig config;
    config.name = required(section, "name", where, "variety", false).items.front().text;
    config.params = required(section, "params", where, "variety", true).items;
    config.coords = required(section, "coords", where, "variety", true).items;

    if (const auto fiber = sections.find("fiber"); fiber != sections.end()) {
        const auto& [fsection, fwhere] = fiber->second;
        reject_unknown_keys(fsection, {"params", "base_binding", "coords"});
        FiberConfig fc;
        fc.where = fwhere;
        fc.params = required(fsection, "params", fwhere, "fiber", true).items;
        fc.base_binding = required(fsection, "base_binding", fwhere, "fiber", true).items;
        fc.coords = required(fsection, "coords", fwhere, "fiber", true).items;
        config.fiber = std::move(fc);
    }
    return config;
}

LoadedVariety load_variety(const VarietyConfig& config) {
    const auto params = names_of(config.params);
    if (params.empty()) throw ConfigError(1, 1, "[variety] needs at least one parameter");
    if (config.coords.size() < 2) throw ConfigError(1, 1, "[variety] needs at least two coordinates");
    std::vector<Polynomial> coords;
    for (const auto& item : config.coords) coords.push_back(parse_item(item, params));

    std::vector<std::string> warnings;
    if (params.size() >= config.coords.size() - 1)
        warnings.push_back("n = " + std::to_string(params.size()) + " is not below r = " +
                           std::to_string(config.coords.size() - 1) + "; the variety has no positive codimension");

    std::optional<Parametrization> p;
    try {
        p.emplace(config.name, params, std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(1, 1, e.what());
    }

    std::optional<FiberMap> fiber;
    if (config.fiber) {
        const auto& fc = *config.fiber;
        const auto base = names_of(fc.base_binding);
        const auto fparams = names_of(fc.params);
        if (base.size() != params.size())
            throw ConfigError(fc.where.line, fc.where.column, "base_binding must name one variable per parameter");
        auto vars = base;
        vars.insert(vars.end(), fparams.begin(), fparams.end());
        std::vector<Polynomial> fcoords;
        for (const auto& item : fc.coords) fcoords.push_back(parse_item(item, vars));
        try {
            fiber.emplace(base, fparams, std::move(fcoords));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(fc.where.line, fc.where.column, e.what());
        }
    }
    return LoadedVariety{std::move(*p), std::move(fiber), std::move(warnings)};
}

std::string export_config(const Parametrization& p, const FiberMap* fiber) {
    std::vector<std::string> coords;
    for (const auto& c : p.coords()) coords.push_back(c.to_string());
    std::string out = "[variety]\n";
    out += "name = \"" + p.name() + "\"\n";
    out += "params = " + quoted_list(p.params()) + "\n";
    out += "coords = " + quoted_list(coords) + "\n";
    if (fiber) {
        std::vector<std::string> fcoords;
        for (const auto& c : fiber->coords()) fcoords.push_back(c.to_string());
        out += "\n[fiber]\n";
        out += "base_binding = " + quoted_list(fiber->base_binding()) + "\n";
        out += "params = " + quoted_list(fiber->params()) + "\n";
        out += "coords = " + quoted_list(fcoords) + "\n";
    }
    return out;
}

std::string export_config(const CatalogEntry& entry) {
    return export_config(entry.parametrization, entry.fiber ? &*entry.fiber : nullptr);
}

} // namespace osc

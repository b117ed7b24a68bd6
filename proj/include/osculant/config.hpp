#pragma once

#include "osculant/catalog.hpp"
#include "osculant/geometry.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

/// Config problems, located by 1-based line and column.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, std::size_t column, const std::string& message);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct SourceLocation {
    std::size_t line = 0;
    std::size_t column = 0;
};

/// A config value: either one string or a list of strings, each with the
/// location of its first character.
struct ConfigItem {
    std::string text;
    SourceLocation where;
};

struct FiberConfig {
    std::vector<ConfigItem> params;
    std::vector<ConfigItem> base_binding;
    std::vector<ConfigItem> coords;
    SourceLocation where;
};

/// Parsed form of
///
///     [variety]
///     name = "cone_rnc4"
///     params = ["u", "v"]
///     coords = ["v", "v*u", "v*u^2", "v*u^3", "v*u^4", "1"]
///
///     [fiber]                      # optional
///     base_binding = ["u0", "v0"]
///     params = ["s"]
///     coords = ["u0", "v0 + s"]
///
/// Strings are double-quoted; arrays may span lines; '#' starts a comment.
struct VarietyConfig {
    std::string name;
    std::vector<ConfigItem> params;
    std::vector<ConfigItem> coords;
    std::optional<FiberConfig> fiber;
};

VarietyConfig parse_config(std::string_view text);

struct LoadedVariety {
    Parametrization parametrization;
    std::optional<FiberMap> fiber;
    std::vector<std::string> warnings;
};

/// Parses every expression; errors point at the offending character.
LoadedVariety load_variety(const VarietyConfig& config);

std::string export_config(const Parametrization& p, const FiberMap* fiber = nullptr);
std::string export_config(const CatalogEntry& entry);

} // namespace osc

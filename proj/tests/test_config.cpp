#include "osculant/config.hpp"

#include <doctest.h>

namespace {

const char* kCone = R"(# cone over the rational normal quartic
[variety]
name = "cone"
params = ["u", "v"]
coords = [
  "v", "v*u", "v*u^2",   # first three
  "v*u^3", "v*u^4",
  "1",
]

[fiber]
base_binding = ["u0", "v0"]
params = ["s"]
coords = ["u0", "v0 + s"]
)";

std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
    try {
        osc::load_variety(osc::parse_config(text));
    } catch (const osc::ConfigError& e) {
        return {e.line(), e.column()};
    }
    FAIL("expected a config error");
    return {0, 0};
}

} // namespace

TEST_CASE("config parses sections, multi-line arrays and comments") {
    const auto config = osc::parse_config(kCone);
    CHECK(config.name == "cone");
    CHECK(config.params.size() == 2);
    CHECK(config.coords.size() == 6);
    CHECK(config.coords[3].text == "v*u^3");
    CHECK(config.coords[3].where.line == 7);
    CHECK(config.coords[3].where.column == 4);
    REQUIRE(config.fiber);

    const auto loaded = osc::load_variety(config);
    CHECK(loaded.parametrization.n() == 2);
    CHECK(loaded.parametrization.r() == 5);
    CHECK(loaded.fiber->dim() == 1);
    CHECK(loaded.warnings.empty());
}

TEST_CASE("config errors point at line and column") {
    // Expression error inside a string: column of the offending character.
    CHECK(error_at("[variety]\nname = \"x\"\nparams = [\"u\"]\ncoords = [\"1\", \"2u\"]\n") ==
          std::pair<std::size_t, std::size_t>{4, 18});
    CHECK(error_at("[variety]\nname = \"x\"\nparams = [\"u\"]\ncoords = [\"1\", \"u + w\"]\n") ==
          std::pair<std::size_t, std::size_t>{4, 21});
    // Unterminated string.
    CHECK(error_at("[variety]\nname = \"x\n").first == 2);
    // Unknown key.
    CHECK(error_at("[variety]\nname = \"x\"\ncolor = \"red\"\n") == std::pair<std::size_t, std::size_t>{3, 9});
    // Missing section.
    CHECK(error_at("# nothing\n") == std::pair<std::size_t, std::size_t>{1, 1});
    // Key before any section.
    CHECK(error_at("name = \"x\"\n") == std::pair<std::size_t, std::size_t>{1, 1});
    // Missing key.
    CHECK(error_at("[variety]\nname = \"x\"\nparams = [\"u\"]\n").first == 1);
    // Wrong value kind.
    CHECK(error_at("[variety]\nname = [\"x\"]\nparams = [\"u\"]\ncoords = [\"1\", \"u\"]\n") ==
          std::pair<std::size_t, std::size_t>{2, 8});
    // Bad variable name.
    CHECK(error_at("[variety]\nname = \"x\"\nparams = [\"1u\"]\ncoords = [\"1\", \"u\"]\n") ==
          std::pair<std::size_t, std::size_t>{3, 12});
    // Fiber that misses its base point.
    CHECK(error_at("[variety]\nname = \"x\"\nparams = [\"u\"]\ncoords = [\"1\", \"u\", \"u^2\"]\n"
                   "[fiber]\nbase_binding = [\"u0\"]\nparams = [\"s\"]\ncoords = [\"u0 + s + 1\"]\n")
              .first == 5);
    // Trailing junk.
    CHECK(error_at("[variety] extra\n").first == 1);
}

TEST_CASE("non-positive codimension is a warning") {
    const auto loaded = osc::load_variety(
        osc::parse_config("[variety]\nname = \"plane\"\nparams = [\"u\", \"v\"]\ncoords = [\"1\", \"u\", \"v\"]\n"));
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings.front().find("not below r") != std::string::npos);
}

TEST_CASE("export writes the config grammar") {
    const auto loaded = osc::load_variety(osc::parse_config(kCone));
    const auto text = osc::export_config(loaded.parametrization, &*loaded.fiber);
    CHECK(text.find("coords = [\"v\", \"u*v\", \"u^2*v\", \"u^3*v\", \"u^4*v\", \"1\"]") != std::string::npos);
    const auto again = osc::load_variety(osc::parse_config(text));
    CHECK(again.parametrization.coords() == loaded.parametrization.coords());
    CHECK(osc::export_config(again.parametrization, &*again.fiber) == text);
}

#include "osculant/catalog.hpp"

#include <algorithm>

namespace osc {

namespace {

constexpr std::string_view kOracleProvenance = "exact rank oracle, seeds 42 and 7";

Parametrization from_text(std::string name, std::vector<std::string> params, const std::vector<std::string>& coords) {
    std::vector<Polynomial> polys;
    polys.reserve(coords.size());
    for (const auto& c : coords) polys.push_back(parse_polynomial(c, params));
    return Parametrization(std::move(name), std::move(params), std::move(polys));
}

std::vector<std::string> rnc_coords(unsigned d) {
    std::vector<std::string> coords{"1"};
    for (unsigned i = 1; i <= d; ++i) coords.push_back(i == 1 ? "u" : "u^" + std::to_string(i));
    return coords;
}

// h_m = min(m, d) for the degree-d rational normal curve.
std::vector<long> rnc_profile(unsigned d) {
    std::vector<long> dims;
    for (unsigned m = 0; m <= d + 1; ++m) dims.push_back(std::min(m, d));
    return dims;
}

// The ruling through (u0, v0): u fixed, v moving.
FiberMap ruling_fiber() {
    const std::vector<std::string> vars{"u0", "v0", "s"};
    return FiberMap({"u0", "v0"}, {"s"}, {parse_polynomial("u0", vars), parse_polynomial("v0 + s", vars)});
}

unsigned require_range(std::string_view family, std::optional<unsigned> value, unsigned fallback, unsigned lo,
                       unsigned hi, std::string_view what) {
    const unsigned v = value.value_or(fallback);
    if (v < lo || v > hi)
        throw std::invalid_argument(std::string(family) + ": " + std::string(what) + " must be in [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

CatalogEntry rnc(unsigned d) {
    return CatalogEntry{
        .name = "rnc" + std::to_string(d),
        .parametrization = from_text("rnc" + std::to_string(d), {"u"}, rnc_coords(d)),
        .expected_profile = rnc_profile(d),
        .provenance = std::string(kOracleProvenance),
        .fiber = std::nullopt,
        .fiber_order = std::nullopt,
        .notes = "rational normal curve of degree " + std::to_string(d) + " in P^" + std::to_string(d),
    };
}

CatalogEntry rnc_in_hyperplane(unsigned d, unsigned r) {
    auto coords = rnc_coords(d);
    coords.resize(r + 1, "0");
    const std::string name = "rnc" + std::to_string(d) + "_in_P" + std::to_string(r);
    return CatalogEntry{
        .name = name,
        .parametrization = from_text(name, {"u"}, coords),
        .expected_profile = rnc_profile(d),
        .provenance = std::string(kOracleProvenance),
        .fiber = std::nullopt,
        .fiber_order = std::nullopt,
        .notes = "degenerate: rational normal curve padded with zero coordinates",
    };
}

CatalogEntry cone_rnc(unsigned d) {
    std::vector<std::string> coords;
    for (unsigned i = 0; i <= d; ++i)
        coords.push_back(i == 0 ? "v" : i == 1 ? "v*u" : "v*u^" + std::to_string(i));
    coords.push_back("1");
    // h_0 = 0, then h_m = m + 1 until the span P^{d+1} is filled at m = d.
    std::vector<long> dims{0};
    for (unsigned m = 1; m <= d; ++m) dims.push_back(m + 1);
    const std::string name = "cone_rnc" + std::to_string(d);
    return CatalogEntry{
        .name = name,
        .parametrization = from_text(name, {"u", "v"}, coords),
        .expected_profile = dims,
        .provenance = std::string(kOracleProvenance),
        .fiber = ruling_fiber(),
        .fiber_order = d >= 3 ? 2u : 1u,
        .notes = "cone over the rational normal curve of degree " + std::to_string(d) +
                 " with vertex e_" + std::to_string(d + 2) + "; osculating spaces are constant along rulings",
    };
}

CatalogEntry cone_rnc3_in_p5() {
    return CatalogEntry{
        .name = "cone_rnc3_in_P5",
        .parametrization = from_text("cone_rnc3_in_P5", {"u", "v"}, {"v", "v*u", "v*u^2", "v*u^3", "1", "0"}),
        .expected_profile = {0, 2, 3, 4, 4},
        .provenance = std::string(kOracleProvenance),
        .fiber = ruling_fiber(),
        .fiber_order = 2u,
        .notes = "cone over the twisted cubic inside a hyperplane of P^5",
    };
}

CatalogEntry veronese2() {
    return CatalogEntry{
        .name = "veronese2",
        .parametrization = from_text("veronese2", {"u", "v"}, {"1", "u", "v", "u^2", "u*v", "v^2"}),
        .expected_profile = {0, 2, 5},
        .provenance = std::string(kOracleProvenance),
        .fiber = std::nullopt,
        .fiber_order = std::nullopt,
        .notes = "quadratic Veronese surface, chart z = 1",
    };
}

CatalogEntry veronese3() {
    return CatalogEntry{
        .name = "veronese3",
        .parametrization = from_text("veronese3", {"u", "v"},
                                     {"1", "u", "v", "u^2", "u*v", "v^2", "u^3", "u^2*v", "u*v^2", "v^3"}),
        .expected_profile = {0, 2, 5, 9},
        .provenance = std::string(kOracleProvenance),
        .fiber = std::nullopt,
        .fiber_order = std::nullopt,
        .notes = "cubic Veronese surface in P^9, chart z = 1",
    };
}

CatalogEntry segre11() {
    return CatalogEntry{
        .name = "segre11",
        .parametrization = from_text("segre11", {"u", "v"}, {"1", "u", "v", "u*v"}),
        .expected_profile = {0, 2, 3},
        .provenance = std::string(kOracleProvenance),
        .fiber = std::nullopt,
        .fiber_order = std::nullopt,
        .notes = "Segre quadric P^1 x P^1 in P^3",
    };
}

CatalogEntry togliatti() {
    return CatalogEntry{
        .name = "togliatti",
        .parametrization =
            from_text("togliatti", {"u", "v"}, {"u^2*v", "u^2", "u*v^2", "v^2", "u", "v"}),
        .expected_profile = {0, 2, 4, 5},
        .provenance = std::string(kOracleProvenance),
        .fiber = std::nullopt,
        .fiber_order = std::nullopt,
        .notes = "chart z = 1 of the cubic system {x^2y, x^2z, xy^2, y^2z, xz^2, yz^2}; "
                 "satisfies a Laplace equation, so h_2 = 4 < 5",
    };
}

} // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names{"cone_rnc", "cone_rnc3_in_P5", "rnc",       "rnc_in_hyperplane",
                                   "segre11",  "togliatti",       "veronese2", "veronese3"};
    std::sort(names.begin(), names.end());
    return names;
}

CatalogEntry catalog_get(std::string_view name, const CatalogArgs& args) {
    if (name == "rnc") return rnc(require_range(name, args.degree, 5, 1, 8, "degree"));
    if (name == "rnc_in_hyperplane") {
        const unsigned d = require_range(name, args.degree, 4, 1, 8, "degree");
        return rnc_in_hyperplane(d, require_range(name, args.ambient, d + 1, d + 1, 16, "ambient dimension"));
    }
    if (name == "cone_rnc") return cone_rnc(require_range(name, args.degree, 4, 2, 8, "degree"));
    if (name == "cone_rnc3_in_P5") return cone_rnc3_in_p5();
    if (name == "veronese2") return veronese2();
    if (name == "veronese3") return veronese3();
    if (name == "segre11") return segre11();
    if (name == "togliatti") return togliatti();
    throw UnknownCatalogEntry("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<CatalogEntry> catalog_corpus() {
    return {
        rnc(3),      rnc(5),        rnc(8),     rnc_in_hyperplane(4, 5), veronese2(),       veronese3(),
        segre11(),   cone_rnc(3),   cone_rnc(4), cone_rnc3_in_p5(),       togliatti(),
    };
}

} // namespace osc

#include "oracle.hpp"
#include "support.hpp"

#include "osculant/catalog.hpp"
#include "osculant/geometry.hpp"

#include <doctest.h>

using osc::make_vector;
using osc::Parametrization;
using osc::SamplePlan;

namespace {

Parametrization make(const std::string& name, std::vector<std::string> params,
                     const std::vector<std::string>& coords) {
    std::vector<osc::Polynomial> polys;
    for (const auto& c : coords) polys.push_back(osc::parse_polynomial(c, params));
    return Parametrization(name, std::move(params), std::move(polys));
}

Parametrization entry(std::string_view name, osc::CatalogArgs args = {}) {
    return osc::catalog_get(name, args).parametrization;
}

const SamplePlan plan42{42, 5, 1000};

} // namespace

TEST_CASE("osculating_matrix rows are the derivative vectors") {
    const auto rnc4 = entry("rnc", {4, {}});
    const osc::Vector t0{2};
    const auto m1 = osc::osculating_matrix(rnc4, 1, t0);
    REQUIRE(m1.rows() == 2);
    CHECK(osc::Vector(m1.row(0).begin(), m1.row(0).end()) == make_vector({1, 2, 4, 8, 16}));
    CHECK(osc::Vector(m1.row(1).begin(), m1.row(1).end()) == make_vector({0, 1, 4, 12, 32}));

    const auto m0 = osc::osculating_matrix(rnc4, 0, t0);
    CHECK(m0.rows() == 1);
    CHECK(osc::Vector(m0.row(0).begin(), m0.row(0).end()) == rnc4.evaluate(t0));

    const auto cone = entry("cone_rnc", {4, {}});
    const osc::Vector p11{1, 1};
    const auto m2 = osc::osculating_matrix(cone, 2, p11);
    REQUIRE(m2.rows() == 6);
    const auto row11 = m2.row(osc::graded_position(osc::MultiIndex({1, 1})));
    const auto row10 = m2.row(osc::graded_position(osc::MultiIndex({1, 0})));
    CHECK(osc::Vector(row11.begin(), row11.end()) == make_vector({0, 1, 2, 3, 4, 0}));
    CHECK(osc::Vector(row10.begin(), row10.end()) == make_vector({0, 1, 2, 3, 4, 0}));
    CHECK(osc::rank(m2) == 4);
    CHECK(oracle::bareiss_rank(oracle::osculating_rows(cone, 2, p11)) == 4);
}

TEST_CASE("osculating_matrix agrees with closed-form derivatives") {
    for (const auto& e : osc::catalog_corpus()) {
        const auto& p = e.parametrization;
        osc::Vector t0;
        for (std::size_t j = 0; j < p.n(); ++j) t0.emplace_back(static_cast<long>(3 * j + 2));
        const auto m = osc::osculating_matrix(p, 3, t0);
        CHECK(testing_support::rows_of(m) == oracle::osculating_rows(p, 3, t0));
    }
}

TEST_CASE("osculating_dim") {
    const auto rnc5 = entry("rnc", {5, {}});
    const osc::Vector t0{-317};
    CHECK(osc::osculating_dim(rnc5, 3, t0) == 3);
    CHECK(oracle::osculating_dim(rnc5, 3, t0) == 3);
    for (const auto& e : osc::catalog_corpus()) {
        osc::Vector t(e.parametrization.n(), osc::Rational(7));
        CHECK(osc::osculating_dim(e.parametrization, 0, t) == 0);
    }
    const auto cone = entry("cone_rnc", {4, {}});
    const osc::Vector generic{431, -88};
    CHECK(osc::osculating_dim(cone, 2, generic) == 3);
    CHECK(oracle::osculating_dim(cone, 2, generic) == 3);
}

TEST_CASE("a vanishing lift is reported") {
    const auto p = make("vanishing", {"u"}, {"u", "u^2", "u^3"});
    CHECK_THROWS_AS(osc::osculating_matrix(p, 1, make_vector({0})), osc::VanishingLift);
    CHECK_THROWS_AS(osc::osculating_matrix(p, 1, make_vector({0, 1})), osc::DimensionMismatch);
}

TEST_CASE("generic_osculating_dim") {
    const auto v2 = osc::generic_osculating_dim(entry("veronese2"), 2, plan42);
    CHECK(v2.dim == 5);
    CHECK(v2.witness.size() == 2);
    CHECK(osc::generic_osculating_dim(entry("rnc_in_hyperplane", {4, 5}), 4, plan42).dim == 4);
    const auto tog = osc::generic_osculating_dim(entry("togliatti"), 2, plan42);
    CHECK(tog.dim == 4);
    CHECK(oracle::osculating_dim(entry("togliatti"), 2, tog.witness) == 4);
}

TEST_CASE("profile") {
    CHECK(osc::profile(entry("rnc", {5, {}}), 6, plan42).dims == std::vector<long>{0, 1, 2, 3, 4, 5, 5});
    CHECK(osc::profile(entry("veronese2"), 2, plan42).dims == std::vector<long>{0, 2, 5});
    CHECK(osc::profile(entry("cone_rnc", {4, {}}), 4, plan42).dims == std::vector<long>{0, 2, 3, 4, 5});
    CHECK_THROWS_AS(osc::profile(entry("veronese2"), 0, plan42), std::invalid_argument);
}

TEST_CASE("profile is reproducible from the plan") {
    const auto p = entry("togliatti");
    const auto a = osc::profile(p, 3, plan42);
    const auto b = osc::profile(p, 3, plan42);
    CHECK(a.dims == b.dims);
    CHECK(a.witness == b.witness);
    const auto c = osc::profile(p, 3, SamplePlan{7, 5, 1000});
    CHECK(c.dims == a.dims);
    CHECK(c.witness != a.witness);
}

TEST_CASE("profile invariants over the corpus") {
    for (const auto& e : osc::catalog_corpus()) {
        const auto& p = e.parametrization;
        const auto prof = osc::profile(p, 4, plan42);
        CAPTURE(e.name);
        CHECK(prof.dims[0] == 0);
        CHECK(prof.dims[1] == static_cast<long>(p.n()));
        for (unsigned m = 0; m + 1 < prof.dims.size(); ++m) CHECK(prof.dims[m] <= prof.dims[m + 1]);
        for (unsigned m = 0; m < prof.dims.size(); ++m)
            CHECK(prof.dims[m] <= std::min<long>(p.r(), static_cast<long>(osc::count(p.n(), m)) - 1));
        // The shared witness realizes the per-order maximum.
        for (unsigned m = 0; m < prof.dims.size(); ++m)
            CHECK(prof.dims[m] == osc::generic_osculating_dim(p, m, plan42).dim);
    }
}

TEST_CASE("variety_span_dim") {
    CHECK(osc::variety_span_dim(entry("rnc", {4, {}}), plan42).dim == 4);
    CHECK(osc::variety_span_dim(entry("rnc_in_hyperplane", {4, 5}), plan42).dim == 4);
    CHECK(osc::variety_span_dim(entry("veronese2"), plan42).dim == 5);
    CHECK(oracle::span_dim(entry("veronese2"), 1, 7) == 5);
    CHECK(oracle::span_dim(entry("rnc", {4, {}}), 1, 7) == 4);

    const auto span = osc::variety_span_dim(entry("rnc_in_hyperplane", {4, 5}), plan42);
    // Not full, so sampling continued until r + 1 points left the rank unchanged.
    CHECK(span.points_used >= 5 + 1);
}

TEST_CASE("joint_osculating_span_dim") {
    const auto rnc5 = entry("rnc", {5, {}});
    CHECK(osc::joint_osculating_span_dim(rnc5, 2, plan42).dim == 5);
    for (const auto& e : osc::catalog_corpus())
        CHECK(osc::joint_osculating_span_dim(e.parametrization, 0, plan42).dim ==
              osc::variety_span_dim(e.parametrization, plan42).dim);
    CHECK(osc::joint_osculating_span_dim(entry("rnc_in_hyperplane", {4, 5}), 1, plan42).dim == 4);
}

TEST_CASE("osculating_variety_dim") {
    for (const auto& e : osc::catalog_corpus())
        CHECK(osc::osculating_variety_dim(e.parametrization, 0, plan42).dim == static_cast<long>(e.parametrization.n()));
    const auto rnc5 = entry("rnc", {5, {}});
    CHECK(osc::osculating_variety_dim(rnc5, 2, plan42).dim == 3);
    CHECK(oracle::osculating_variety_dim(rnc5, 2, 1) == 3);

    // The tangent variety of the Veronese surface is a hypersurface.
    const auto v2 = osc::osculating_variety_dim(entry("veronese2"), 1, plan42);
    CHECK(v2.dim == 4);
    CHECK(oracle::osculating_variety_dim(entry("veronese2"), 1, 1) == 4);
    CHECK(oracle::osculating_variety_dim(entry("veronese2"), 1, 2) == 4);
    CHECK(oracle::osculating_variety_dim_at(entry("veronese2"), 1, v2.witness, v2.weights) == 4);
}

TEST_CASE("joint span >= osculating variety >= osculating space") {
    for (const auto& e : osc::catalog_corpus()) {
        const auto& p = e.parametrization;
        const auto prof = osc::profile(p, 3, plan42);
        for (unsigned m = 1; m <= 2; ++m) {
            CAPTURE(e.name);
            CAPTURE(m);
            const long ovd = osc::osculating_variety_dim(p, m, plan42).dim;
            CHECK(osc::joint_osculating_span_dim(p, m, plan42).dim >= ovd);
            CHECK(ovd >= prof.dims[m]);
            CHECK(ovd <= prof.dims[m + 1]);
        }
    }
}

TEST_CASE("profiles are projectively invariant") {
    std::mt19937_64 rng(77);
    for (const auto& e : osc::catalog_corpus()) {
        const auto& p = e.parametrization;
        const auto expected = osc::profile(p, 3, plan42).dims;
        for (int i = 0; i < 3; ++i) {
            const auto a = testing_support::random_invertible(rng, p.r() + 1);
            CHECK(osc::profile(p.transformed(a), 3, plan42).dims == expected);
        }
    }
}

TEST_CASE("profiles are invariant under affine reparametrization") {
    std::mt19937_64 rng(78);
    for (const auto& e : osc::catalog_corpus()) {
        const auto& p = e.parametrization;
        const auto expected = osc::profile(p, 3, plan42).dims;
        for (int i = 0; i < 3; ++i) {
            const auto c = testing_support::random_invertible(rng, p.n());
            const auto d = testing_support::random_matrix(rng, 1, p.n());
            CHECK(osc::profile(p.reparametrized(c, d.row(0)), 3, plan42).dims == expected);
        }
    }
}

TEST_CASE("rejected sample points are logged") {
    // At height 1 the vertex line v = 0 of the cone is hit often.
    const auto cone = entry("cone_rnc", {4, {}});
    const auto prof = osc::profile(cone, 2, SamplePlan{42, 5, 1});
    CHECK_FALSE(prof.rejected.empty());
    for (const auto& r : prof.rejected) {
        CHECK(r.point[1] == 0);
        CHECK(r.reason.find("not immersive") != std::string::npos);
    }
    CHECK(prof.witness[1] != 0);
}

TEST_CASE("degenerate parametrizations exhaust the retry budget") {
    const auto line = make("doubled", {"u"}, {"u", "u"});
    CHECK_THROWS_AS(osc::profile(line, 1, plan42), osc::RetryLimitExceeded);
    const auto surface = make("flat", {"u", "v"}, {"1", "u + v", "u + v"});
    CHECK_THROWS_AS(osc::variety_span_dim(surface, plan42), osc::RetryLimitExceeded);
}

TEST_CASE("parametrization validation") {
    CHECK_THROWS_AS(make("zero", {"u"}, {"0", "0"}), std::invalid_argument);
    CHECK_THROWS_AS(make("short", {"u"}, {"u"}), std::invalid_argument);
    CHECK_THROWS_AS(Parametrization("mixed", {"u"}, {osc::parse_polynomial("v", {"v"}), osc::parse_polynomial("1", {"u"})}),
                    std::invalid_argument);
}

TEST_CASE("fiber maps") {
    const std::vector<std::string> vars{"u0", "v0", "s"};
    auto poly = [&](const char* text) { return osc::parse_polynomial(text, vars); };
    const osc::FiberMap ruling({"u0", "v0"}, {"s"}, {poly("u0"), poly("v0 + s")});
    CHECK(ruling.point(make_vector({3, 4}), make_vector({2})) == make_vector({3, 6}));
    CHECK(ruling.point(make_vector({3, 4}), make_vector({0})) == make_vector({3, 4}));

    const auto cone = entry("cone_rnc", {4, {}});
    const auto y = ruling.restrict(cone, make_vector({2, 5}));
    CHECK(y.n() == 1);
    CHECK(y.evaluate(make_vector({1})) == cone.evaluate(make_vector({2, 6})));

    CHECK_THROWS_AS(osc::FiberMap({"u0", "v0"}, {"s"}, {poly("u0 + s"), poly("v0 + 1")}), std::invalid_argument);
    CHECK_THROWS_AS(osc::FiberMap({"u0", "v0"}, {"s"}, {poly("u0")}), std::invalid_argument);
}

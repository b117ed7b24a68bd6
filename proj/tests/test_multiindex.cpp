#include "oracle.hpp"

#include "osculant/multiindex.hpp"

#include <doctest.h>

#include <set>

using osc::MultiIndex;

namespace {

std::vector<std::vector<unsigned>> exponents_of(const std::vector<MultiIndex>& list) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& i : list) out.emplace_back(i.exponents().begin(), i.exponents().end());
    return out;
}

} // namespace

TEST_CASE("enumerate lists indices in graded lexicographic order") {
    CHECK(exponents_of(osc::enumerate(1, 2)) == std::vector<std::vector<unsigned>>{{0}, {1}, {2}});
    CHECK(exponents_of(osc::enumerate(2, 1)) == std::vector<std::vector<unsigned>>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(osc::enumerate(2, 3).size() == 10);
    CHECK(exponents_of(osc::enumerate(2, 2)) ==
          std::vector<std::vector<unsigned>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    CHECK(osc::enumerate(3, 4).front() == MultiIndex::zero(3));
}

TEST_CASE("count is the binomial coefficient") {
    CHECK(osc::count(1, 5) == 6);
    CHECK(osc::count(3, 2) == 10);
    CHECK(osc::count(2, 0) == 1);
    CHECK_THROWS_AS(osc::count(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(osc::enumerate(0, 2), std::invalid_argument);
}

TEST_CASE("Pascal identity for count") {
    for (std::size_t n = 2; n <= 8; ++n)
        for (unsigned m = 1; m <= 8; ++m) CHECK(osc::count(n, m) == osc::count(n, m - 1) + osc::count(n - 1, m));
}

TEST_CASE("enumerate matches brute force and is prefix-stable") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (unsigned m = 0; m <= 6; ++m) {
            const auto list = osc::enumerate(n, m);
            CHECK(list.size() == osc::count(n, m));
            CHECK(exponents_of(list) == oracle::brute_indices(n, m));

            std::set<std::vector<unsigned>> seen;
            for (std::size_t k = 0; k < list.size(); ++k) {
                CHECK(list[k].order() <= m);
                CHECK(seen.insert(exponents_of({list[k]}).front()).second);
                CHECK(osc::graded_position(list[k]) == k);
                if (k) CHECK(osc::graded_lex_less(list[k - 1], list[k]));
            }
            const auto next = osc::enumerate(n, m + 1);
            CHECK(std::equal(list.begin(), list.end(), next.begin()));
        }
    }
}

TEST_CASE("unit steps") {
    const MultiIndex i({2, 0, 1});
    CHECK(i.order() == 3);
    CHECK(i.plus_unit(1) == MultiIndex({2, 1, 1}));
    CHECK(i.minus_unit(0) == MultiIndex({1, 0, 1}));
    CHECK_FALSE(i.minus_unit(1).has_value());
    CHECK(i + MultiIndex({0, 2, 0}) == MultiIndex({2, 2, 1}));
    CHECK(i.to_string() == "(2,0,1)");
}

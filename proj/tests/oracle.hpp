#pragma once

// Test-only reference computations. Nothing here calls the library's
// elimination, differentiation or sampling code, so results computed with
// these helpers are independent checks of the implementation.

#include "osculant/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using osc::Rational;

/// Fraction-free Bareiss elimination on a row-scaled integer copy.
inline std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<mpz_class>> a;
    for (const auto& row : rows) {
        mpz_class scale = 1;
        for (const auto& x : row) scale = scale * x.get_den() / gcd(scale, x.get_den());
        std::vector<mpz_class> ints;
        for (const auto& x : row) ints.push_back(x.get_num() * (scale / x.get_den()));
        a.push_back(std::move(ints));
    }
    std::size_t rank = 0;
    mpz_class previous = 1;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / previous;
            a[i][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Brute-force graded-lex list of all I with |I| <= m.
inline std::vector<std::vector<unsigned>> brute_indices(std::size_t n, unsigned m) {
    std::vector<std::vector<unsigned>> all;
    std::vector<unsigned> e(n, 0);
    for (;;) {
        unsigned total = 0;
        for (unsigned x : e) total += x;
        if (total <= m) all.push_back(e);
        std::size_t j = 0;
        while (j < n && e[j] == m) e[j++] = 0;
        if (j == n) break;
        ++e[j];
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        unsigned sa = 0, sb = 0;
        for (unsigned x : a) sa += x;
        for (unsigned x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a > b;
    });
    return all;
}

/// d^I of sum c t^E at t0 by the closed form c * prod (E_j)_(I_j) t0_j^(E_j - I_j).
inline Rational derivative_value(const osc::Polynomial& f, const std::vector<unsigned>& index,
                                 const std::vector<Rational>& t0) {
    Rational total = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (index[j] > e[j]) {
                term = 0;
                break;
            }
            for (unsigned k = 0; k < index[j]; ++k) term *= e[j] - k;
            for (unsigned k = 0; k < e[j] - index[j]; ++k) term *= t0[j];
        }
        total += term;
    }
    return total;
}

inline std::vector<std::vector<Rational>> osculating_rows(const osc::Parametrization& p, unsigned m,
                                                          const std::vector<Rational>& t0) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& index : brute_indices(p.n(), m)) {
        std::vector<Rational> row;
        for (const auto& f : p.coords()) row.push_back(derivative_value(f, index, t0));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline long osculating_dim(const osc::Parametrization& p, unsigned m, const std::vector<Rational>& t0) {
    return static_cast<long>(bareiss_rank(osculating_rows(p, m, t0))) - 1;
}

/// Lexicographically largest profile over `samples` points drawn with a
/// plain std::mt19937 from [-1000, 1000]^n.
inline std::vector<long> profile(const osc::Parametrization& p, unsigned m_max, unsigned seed,
                                 std::size_t samples = 5) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    std::vector<long> best;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> t0;
        for (std::size_t j = 0; j < p.n(); ++j) t0.emplace_back(coord(rng));
        std::vector<long> dims;
        for (unsigned m = 0; m <= m_max; ++m) dims.push_back(osculating_dim(p, m, t0));
        best = std::max(best, dims);
    }
    return best;
}

/// Dimension of T(m, X) at one point with weights alpha, from closed-form
/// derivatives.
inline long osculating_variety_dim_at(const osc::Parametrization& p, unsigned m, const std::vector<Rational>& t0,
                                      const std::vector<Rational>& alpha) {
    auto rows = osculating_rows(p, m, t0);
    const auto indices = brute_indices(p.n(), m);
    for (std::size_t j = 0; j < p.n(); ++j) {
        std::vector<Rational> row(p.coords().size());
        for (std::size_t k = 0; k < indices.size(); ++k) {
            auto moved = indices[k];
            ++moved[j];
            for (std::size_t c = 0; c < row.size(); ++c)
                row[c] += alpha[k] * derivative_value(p.coords()[c], moved, t0);
        }
        rows.push_back(std::move(row));
    }
    return static_cast<long>(bareiss_rank(rows)) - 1;
}

inline long osculating_variety_dim(const osc::Parametrization& p, unsigned m, unsigned seed,
                                   std::size_t samples = 5) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    std::uniform_int_distribution<int> weight(-100, 100);
    long best = -1;
    const std::size_t terms = brute_indices(p.n(), m).size();
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> t0, alpha;
        for (std::size_t j = 0; j < p.n(); ++j) t0.emplace_back(coord(rng));
        for (std::size_t k = 0; k < terms; ++k) alpha.emplace_back(weight(rng));
        best = std::max(best, osculating_variety_dim_at(p, m, t0, alpha));
    }
    return best;
}

/// Rank of the stacked values p(t_i) over `points` random points.
inline long span_dim(const osc::Parametrization& p, unsigned seed, std::size_t points) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t s = 0; s < points; ++s) {
        std::vector<Rational> t0;
        for (std::size_t j = 0; j < p.n(); ++j) t0.emplace_back(coord(rng));
        rows.push_back(osculating_rows(p, 0, t0).front());
    }
    return static_cast<long>(bareiss_rank(rows)) - 1;
}

} // namespace oracle

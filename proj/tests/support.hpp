#pragma once

#include "osculant/linalg.hpp"
#include "osculant/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

inline osc::Rational small_rational(std::mt19937_64& rng, int height = 9) {
    std::uniform_int_distribution<int> num(-height, height);
    std::uniform_int_distribution<int> den(1, height);
    osc::Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline osc::Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                         std::size_t terms = 5, unsigned max_degree = 4) {
    osc::Polynomial f(vars);
    std::uniform_int_distribution<unsigned> exp(0, max_degree);
    for (std::size_t k = 0; k < terms; ++k) {
        osc::Polynomial::Exponent e(vars.size());
        for (auto& x : e) x = exp(rng);
        f.add_term(e, small_rational(rng));
    }
    return f;
}

inline osc::QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int height = 9) {
    osc::QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(rng, height);
    return m;
}

/// rows x cols with rank at most `target` (product of thin factors).
inline osc::QMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t target) {
    return random_matrix(rng, rows, target) * random_matrix(rng, target, cols);
}

inline osc::QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        auto m = random_matrix(rng, n, n, 5);
        if (osc::rank(m) == n) return m;
    }
}

inline std::vector<std::vector<osc::Rational>> rows_of(const osc::QMatrix& m) {
    std::vector<std::vector<osc::Rational>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

} // namespace testing_support

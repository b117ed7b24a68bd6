#include "osculant/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osc {

MultiIndex::MultiIndex(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      order_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

MultiIndex MultiIndex::zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
    std::vector<unsigned> e(n, 0);
    e.at(j) = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::plus_unit(std::size_t j) const {
    auto e = exponents_;
    ++e.at(j);
    return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::minus_unit(std::size_t j) const {
    if (exponents_.at(j) == 0) return std::nullopt;
    auto e = exponents_;
    --e[j];
    return MultiIndex(std::move(e));
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
    auto e = a.exponents_;
    for (std::size_t j = 0; j < e.size(); ++j) e[j] += b.exponents_[j];
    return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(exponents_[j]);
    }
    return out + ")";
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
}

namespace {

// Compositions of `remaining` into the slots [j, n), largest leading part first.
void compositions(std::vector<unsigned>& current, std::size_t j, unsigned remaining,
                  std::vector<MultiIndex>& out) {
    if (j + 1 == current.size()) {
        current[j] = remaining;
        out.emplace_back(current);
        return;
    }
    for (unsigned part = remaining + 1; part-- > 0;) {
        current[j] = part;
        compositions(current, j + 1, remaining - part, out);
    }
}

} // namespace

std::vector<MultiIndex> enumerate(std::size_t n, unsigned m) {
    if (n == 0) throw std::invalid_argument("multi-indices need n >= 1");
    std::vector<MultiIndex> out;
    out.reserve(count(n, m));
    std::vector<unsigned> current(n, 0);
    for (unsigned grade = 0; grade <= m; ++grade) compositions(current, 0, grade, out);
    return out;
}

std::uint64_t count(std::size_t n, unsigned m) {
    if (n == 0) throw std::invalid_argument("multi-indices need n >= 1");
    // C(n+m, m) built incrementally; each partial product is itself a binomial.
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= m; ++i) c = c * (n + i) / i;
    return c;
}

std::size_t graded_position(const MultiIndex& index) {
    const std::size_t n = index.size();
    const unsigned order = index.order();
    std::size_t pos = order == 0 ? 0 : count(n, order - 1);
    // Within the grade, count compositions that precede this one.
    unsigned remaining = order;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const std::size_t slots = n - j - 1;
        for (unsigned part = remaining; part > index[j]; --part) {
            const unsigned rest = remaining - part;
            pos += count(slots, rest) - (rest == 0 ? 0 : count(slots, rest - 1));
        }
        remaining -= index[j];
    }
    return pos;
}

} // namespace osc

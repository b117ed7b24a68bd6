#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace osc {

/// Exponent vector I = (i_1, ..., i_n) naming the partial derivative
/// d^{|I|} / dt_1^{i_1} ... dt_n^{i_n}.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents);

    static MultiIndex zero(std::size_t n);
    static MultiIndex unit(std::size_t n, std::size_t j);

    [[nodiscard]] std::size_t size() const noexcept { return exponents_.size(); }
    [[nodiscard]] unsigned order() const noexcept { return order_; }
    [[nodiscard]] unsigned operator[](std::size_t j) const { return exponents_[j]; }
    [[nodiscard]] std::span<const unsigned> exponents() const noexcept { return exponents_; }

    [[nodiscard]] MultiIndex plus_unit(std::size_t j) const;
    /// I - e_j, or nullopt when i_j = 0.
    [[nodiscard]] std::optional<MultiIndex> minus_unit(std::size_t j) const;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<unsigned> exponents_;
    unsigned order_ = 0;
};

/// Graded lexicographic order: lower |I| first; within a grade, larger
/// leading exponents first, so (1,0) precedes (0,1).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

/// All I with |I| <= m in graded lexicographic order. The result for m is a
/// prefix of the result for m + 1.
std::vector<MultiIndex> enumerate(std::size_t n, unsigned m);

/// C(n + m, n), the length of enumerate(n, m).
std::uint64_t count(std::size_t n, unsigned m);

/// Position of I in enumerate(I.size(), m) for any m >= |I|.
std::size_t graded_position(const MultiIndex& index);

} // namespace osc

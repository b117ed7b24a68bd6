#pragma once

#include "osculant/multiindex.hpp"
#include "osculant/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

/// Raised by parse_polynomial. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    [[nodiscard]] std::size_t position() const noexcept { return position_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

/// Multivariate polynomial over Q in named variables t_1..t_n.
///
/// Terms are kept in a map from dense exponent vectors to nonzero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
public:
    using Exponent = std::vector<unsigned>;
    using Terms = std::map<Exponent, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const Rational& c);
    static Polynomial variable(std::vector<std::string> variables, std::size_t j);
    static Polynomial monomial(std::vector<std::string> variables, Exponent e, const Rational& c);

    [[nodiscard]] const std::vector<std::string>& variables() const noexcept { return variables_; }
    [[nodiscard]] std::size_t arity() const noexcept { return variables_.size(); }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] unsigned degree() const;
    [[nodiscard]] Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    [[nodiscard]] Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Text in the input grammar; parse(to_string()) reproduces *this.
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_ring(const Polynomial& other) const;

    std::vector<std::string> variables_;
    Terms terms_;
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nonneg-int)?
///   base   := rational | variable | '(' expr ')'
///   rational := int ('/' positive-int)?
/// No implicit multiplication and no division by variables.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// d f / d t_j, j zero-based.
Polynomial diff(const Polynomial& f, std::size_t j);

/// d^{|I|} f / d t^I.
Polynomial diff_multi(const Polynomial& f, const MultiIndex& index);

Rational eval(const Polynomial& f, std::span<const Rational> point);

/// f(g_1, ..., g_n); every image must share one variable list, which
/// becomes the variable list of the result.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

bool is_valid_identifier(std::string_view name);

} // namespace osc

#include "osculant/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace osc {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
    Polynomial p(std::move(variables));
    p.add_term(Exponent(p.arity(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t j) {
    Polynomial p(std::move(variables));
    Exponent e(p.arity(), 0);
    e.at(j) = 1;
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponent e, const Rational& c) {
    Polynomial p(std::move(variables));
    if (e.size() != p.arity()) throw std::invalid_argument("exponent length does not match arity");
    p.add_term(e, c);
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (variables_ != other.variables_)
        throw std::invalid_argument("polynomials over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial out(a.variables_);
    Polynomial::Exponent e(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(variables_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    // Highest total degree first, then lexicographically larger exponents.
    std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        const unsigned da = std::accumulate(a->first.begin(), a->first.end(), 0u);
        const unsigned db = std::accumulate(b->first.begin(), b->first.end(), 0u);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::string out;
    bool first = true;
    for (const auto* term : ordered) {
        const auto& [e, c] = *term;
        const bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        const Rational magnitude = abs(c);
        std::string vars;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += variables_[j];
            if (e[j] > 1) vars += "^" + std::to_string(e[j]);
        }
        if (vars.empty())
            out += magnitude.get_str();
        else if (magnitude == 1)
            out += vars;
        else
            out += magnitude.get_str() + "*" + vars;
    }
    return out;
}

bool is_valid_identifier(std::string_view name) {
    if (name.empty()) return false;
    const auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_') return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        const auto c = static_cast<unsigned char>(ch);
        return std::isalnum(c) || c == '_';
    });
}

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), variables_(variables) {}

    Polynomial parse() {
        Polynomial result = expr();
        skip_space();
        if (pos_ != text_.size()) fail_unexpected();
        return result;
    }

private:
    Polynomial expr() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_space();
            const char op = peek();
            if (op != '+' && op != '-') return acc;
            ++pos_;
            if (op == '+')
                acc += term();
            else
                acc -= term();
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_space();
            if (peek() != '*') return acc;
            ++pos_;
            acc = acc * factor();
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_space();
        if (peek() != '^') return b;
        ++pos_;
        skip_space();
        if (peek() == '-') throw ParseError(pos_, "negative exponent");
        const std::size_t start = pos_;
        const std::string digits = read_digits();
        if (digits.empty()) throw ParseError(start, "expected a nonnegative integer exponent");
        const mpz_class e(digits, 10);
        if (e > std::numeric_limits<unsigned>::max()) throw ParseError(start, "exponent too large");
        return b.pow(static_cast<unsigned>(e.get_ui()));
    }

    Polynomial base() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_space();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(variables_, rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = std::find(variables_.begin(), variables_.end(), name);
            if (it == variables_.end()) throw ParseError(start, "unknown variable '" + name + "'");
            return Polynomial::variable(variables_, static_cast<std::size_t>(it - variables_.begin()));
        }
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
        fail_unexpected();
    }

    Rational rational() {
        const std::string num = read_digits();
        const std::size_t save = pos_;
        skip_space();
        if (peek() != '/') {
            pos_ = save;
            return Rational(mpz_class(num, 10));
        }
        ++pos_;
        skip_space();
        const std::size_t den_pos = pos_;
        const std::string den = read_digits();
        if (den.empty()) throw ParseError(den_pos, "expected a positive integer denominator");
        const mpz_class d(den, 10);
        if (d == 0) throw ParseError(den_pos, "zero denominator");
        Rational q(mpz_class(num, 10), d);
        q.canonicalize();
        return q;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail_unexpected() const {
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
        throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    for (const auto& v : variables)
        if (!is_valid_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    return ExpressionParser(text, variables).parse();
}

Polynomial diff(const Polynomial& f, std::size_t j) {
    if (j >= f.arity()) throw std::out_of_range("variable index out of range");
    Polynomial out(f.variables());
    for (const auto& [e, c] : f.terms()) {
        if (e[j] == 0) continue;
        auto lowered = e;
        --lowered[j];
        out.add_term(lowered, c * e[j]);
    }
    return out;
}

Polynomial diff_multi(const Polynomial& f, const MultiIndex& index) {
    if (index.size() != f.arity()) throw std::invalid_argument("multi-index length does not match arity");
    Polynomial out(f.variables());
    for (const auto& [e, c] : f.terms()) {
        Rational coeff = c;
        auto lowered = e;
        bool vanishes = false;
        for (std::size_t j = 0; j < e.size() && !vanishes; ++j) {
            if (index[j] > e[j]) {
                vanishes = true;
                break;
            }
            // falling factorial e_j (e_j - 1) ... (e_j - i_j + 1)
            for (unsigned k = 0; k < index[j]; ++k) coeff *= e[j] - k;
            lowered[j] -= index[j];
        }
        if (!vanishes) out.add_term(lowered, coeff);
    }
    return out;
}

Rational eval(const Polynomial& f, std::span<const Rational> point) {
    if (point.size() != f.arity()) throw std::invalid_argument("point length does not match arity");
    Rational total = 0;
    Rational power;
    for (const auto& [e, c] : f.terms()) {
        Rational value = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            mpz_pow_ui(power.get_num_mpz_t(), point[j].get_num_mpz_t(), e[j]);
            mpz_pow_ui(power.get_den_mpz_t(), point[j].get_den_mpz_t(), e[j]);
            value *= power;
        }
        total += value;
    }
    return total;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (images.size() != f.arity()) throw std::invalid_argument("substitution needs one image per variable");
    std::vector<std::string> target = images.empty() ? std::vector<std::string>{} : images.front().variables();
    for (const auto& g : images)
        if (g.variables() != target) throw std::invalid_argument("substitution images over different variables");
    Polynomial out(target);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) term = term * images[j].pow(e[j]);
        out += term;
    }
    return out;
}

} // namespace osc

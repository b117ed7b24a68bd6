#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// through every arithmetic operator.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Shortest exact text form: "7", "-1/2".
std::string to_string(const Rational& q);

/// Always "p/q", integers included ("7/1"); used by the JSON reports.
std::string to_fraction_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign; throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_zero(std::span<const Rational> v);

Vector make_vector(std::initializer_list<long> values);

} // namespace osc

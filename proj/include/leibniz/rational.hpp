#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Parses "p/q", "p", "-p/q" or "+p". Decimals, exponents, whitespace and zero
/// denominators are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace leibniz

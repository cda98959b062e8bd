#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rankcalc {

// mpq_class keeps values in lowest terms with a positive denominator after
// every arithmetic operation; parse_rational canonicalizes string input.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
bool is_integer(const Rational& value);
bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace rankcalc

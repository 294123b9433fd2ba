#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polystab {

// Exact rational scalar. GMP keeps every value canonical (lowest terms,
// positive denominator) as long as construction goes through parse_rational,
// fraction or arithmetic; mpq_class(num, den) alone does not reduce.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", signed integers and finite decimals ("-1.25", ".5", "3.").
// Throws InputError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. Throws InputError when den == 0.
Rational fraction(long num, long den);

// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace polystab

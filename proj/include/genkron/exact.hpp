#pragma once

// Exact integer and rational helpers shared by every other part of the library.
//
// Rational is GMP's mpq_class. Every arithmetic operator of mpq_class returns
// a canonical value (positive denominator, reduced, zero as 0/1), so equality
// is structural. Values built from a raw numerator/denominator pair must go
// through make_rational(), which canonicalizes.

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace genkron {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation is called outside its stated domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rational make_rational(const Integer& num, const Integer& den);

/// True when den > 0 and gcd(|num|, den) = 1.
bool is_canonical(const Rational& q);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// base^exp with 0^0 = 1.
Integer ipow(long base, unsigned long exp);

Integer factorial(unsigned long n);

/// sum_{i=1}^{k-1} i^m
Integer power_sum(int m, int k);

/// sum_{i=1}^{k-1} i^a (k-i)^(m-a), requires 0 <= a <= m and k >= 1.
Integer weighted_power_sum(int a, int m, int k);

/// (-1)^e as +1 / -1.
constexpr int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Renders "num/den"; the denominator is always written, so 2 is "2/1".
std::string to_string(const Rational& q);

/// Parses "num/den" or a bare integer; the result is canonical.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& q, int digits);

} // namespace genkron

#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bellpoly {

using Integer = mpz_class;

/// Exact rational. GMP keeps every arithmetic result in lowest terms with a
/// positive denominator, so structural equality is value equality.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

/// num/den in lowest terms. Prefer this to the two-argument mpq_class
/// constructor, which stores the fraction unreduced.
Rational frac(long num, long den);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed text or
/// a zero denominator.
Rational parse_rational(std::string_view text);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Lexicographic three-way comparison of equal-length vectors.
int lex_compare(std::span<const Rational> a, std::span<const Rational> b);

/// Positive factor that turns `v` into a primitive integer vector (gcd 1).
/// Returns 1 for the zero vector.
Rational primitive_scale(std::span<const Rational> v);

}  // namespace bellpoly

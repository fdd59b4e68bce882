#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gptr {

/// Exact rational scalar. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "p", "p/q", or a finite decimal such as "-0.125" or "3e-2" exactly.
/// Throws ValidationError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational squared_norm(std::span<const Rational> a);
bool is_zero(std::span<const Rational> a);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& a);

std::string to_string(std::span<const Rational> v);

}  // namespace gptr

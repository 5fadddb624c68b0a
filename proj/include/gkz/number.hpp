#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
// Coordinates are kept canonical: reduced fraction, positive denominator.
using RationalVector = std::vector<Rational>;

// Accepts "3", "-7", "1/2", "-4/6" (reduced on the way in).
Rational parse_rational(std::string_view text);
// Comma and/or whitespace separated list of rationals.
RationalVector parse_rational_vector(std::string_view text);
IntVector parse_int_vector(std::string_view text);

// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);

RationalVector to_rational(std::span<const Integer> v);
bool is_integral(const Rational& q);
bool is_integral(std::span<const Rational> v);
// Only valid when is_integral(v).
IntVector to_integer(std::span<const Rational> v);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Integer gcd_of(std::span<const Integer> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector sub(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(const Integer& k, std::span<const Integer> a);
RationalVector add(std::span<const Rational> a, std::span<const Rational> b);
RationalVector sub(std::span<const Rational> a, std::span<const Rational> b);
RationalVector scale(const Rational& k, std::span<const Rational> a);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

}  // namespace gkz

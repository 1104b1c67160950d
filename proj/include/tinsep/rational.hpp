#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tinsep {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or a plain decimal such as "-0.2" into an exact rational.
/// Throws InputError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses a comma-separated list of rationals ("2,1/2,1/2").
std::vector<Rational> parse_rational_list(std::string_view text);

Integer floor(const Rational& value);

/// num/den in canonical form (gmp arithmetic requires canonical operands).
inline Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& value)
{
    return value.get_den() == 1;
}

}  // namespace tinsep

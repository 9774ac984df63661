#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spincount {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an integer or `p/q` literal (optional leading '-'). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

/// value^exponent for a nonnegative exponent.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace spincount

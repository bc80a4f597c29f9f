#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gpforge {

/// Exact rational scalar used everywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q", also for integers ("3/1", "0/1").
std::string to_pq_string(const Rational& q);

/// Short form for human-readable output: "3", "-1/2".
std::string to_display_string(const Rational& q);

/// Accepts "p", "p/q", with optional leading sign. Throws gpforge::ParseError.
Rational parse_rational(std::string_view text);

} // namespace gpforge

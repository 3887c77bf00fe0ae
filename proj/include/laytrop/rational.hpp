#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace laytrop {

/// Exact rational arithmetic; every numeric quantity in the library is one of these.
using Rational = mpq_class;

/// Parses "p", "p/q", "-p/q" (surrounding whitespace ignored). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral) form.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Floor of q as a signed 64-bit value; throws DomainError when out of range.
std::int64_t to_int64(const Rational& q);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace laytrop

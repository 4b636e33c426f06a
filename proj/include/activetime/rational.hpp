#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace activetime {

// Arbitrary precision, always kept in lowest terms with a positive
// denominator. Zero is 0/1.
using Rational = mpq_class;

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
Rational make_rational(long num, long den);

/// Renders as "num/den", also for integral values ("2/1").
std::string to_string(const Rational& value);

/// Parses "num/den" or a plain integer.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& value);
std::int64_t floor_to_int(const Rational& value);
std::int64_t ceil_to_int(const Rational& value);

}  // namespace activetime

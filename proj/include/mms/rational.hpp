#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mms {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p" or "p/q" (optional leading '-') into a canonical rational.
/// Throws ValidationError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q >= 1, e.g. "-11/8", "3/1".
std::string to_fraction_string(const Rational& value);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

/// Converts a nonnegative big integer that is known to fit in 64 bits.
std::uint64_t to_u64(const BigInt& value);

} // namespace mms

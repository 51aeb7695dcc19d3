#pragma once

#include <gmpxx.h>

#include <string>

namespace exppairs {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds a canonical rational (reduced, positive denominator).
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "p/q", plain integers, decimal literals ("0.25") and scientific
// notation ("1e-9"). Parsing is exact; no floating point is involved.
Rational parse_rational(const std::string& text);

// Canonical form as produced by GMP: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Fixed-point decimal with `digits` fractional digits, rounded half away
// from zero. Deterministic: fit for byte-stable output.
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

// Smallest-magnitude rational u with u >= sqrt(s); s must be >= 0.
// Accuracy is ~30 decimal digits, enough to certify iteration error bounds.
Rational sqrt_upper(const Rational& s);

}  // namespace exppairs

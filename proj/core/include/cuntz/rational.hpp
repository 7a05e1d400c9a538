#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cuntz {

// Exact rational arithmetic. All numeric results in the toolkit are exact;
// there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// n^m for integer m of either sign (n >= 2).
Rational rational_pow(int n, int m);

// The unique m with r == n^m, if it exists. r must be positive.
std::optional<int> integer_log(const Rational& r, int n);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace cuntz

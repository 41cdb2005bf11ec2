#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bellhopf {

// Arbitrary-precision scalars. mpq_class keeps values canonical (lowest terms,
// positive denominator, zero as 0/1) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms. mpq_class(n, d) alone does not canonicalize.
Rational ratio(long n, long d);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned n);

/// Binomial coefficient from a memoized Pascal triangle. Zero outside
/// 0 <= k <= n.
Integer binomial(int n, int k);

/// Multinomial n! / (k_1! ... k_m!) with n = sum k_i.
template <class Range>
Integer multinomial(const Range& parts) {
  Integer result = 1;
  int total = 0;
  for (int part : parts) {
    total += part;
    result *= binomial(total, part);
  }
  return result;
}

}  // namespace bellhopf

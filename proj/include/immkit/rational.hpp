#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace immkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(int n);
Integer binomial(int n, int k);  // 0 outside 0 <= k <= n

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace immkit

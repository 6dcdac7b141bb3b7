#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace bnharm {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or "p" (sign on the numerator). Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer factorial(unsigned long n);

// 0 outside the triangle (n < 0, k < 0 or k > n).
Integer binomial(long n, long k);

// j! / prod(alpha_i!) when all alpha_i >= 0, else 0.
// Throws std::invalid_argument unless sum(alpha) == j.
Integer multinomial(unsigned long j, std::span<const long> alpha);

// Rising factorial (t)_n = t(t+1)...(t+n-1); empty product for n = 0.
Rational pochhammer(const Rational& t, unsigned long n);

// 2^n as a Rational, n may be negative.
Rational pow2(long n);

}  // namespace bnharm

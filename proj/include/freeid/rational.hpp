#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace freeid {

using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

// Accepts "p", "p/q" and finite decimals such as "-0.75" or "1e-3".
Rational parse_rational(std::string_view text);

// binary64 approximation (truncated, within one ulp).
double to_double(const Rational& r);

BigInt factorial(unsigned n);
BigInt double_factorial(int n);  // (-1)!! = 0!! = 1
BigInt catalan(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// r^e for integer e >= 0.
Rational pow(const Rational& r, unsigned e);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const BigInt& n) { return sgn(n); }

std::vector<std::string> to_strings(const std::vector<Rational>& values);

}  // namespace freeid

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyball {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// num/den in lowest terms with a positive denominator. Throws
// std::domain_error when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const BigRational& q);

// floor(q), exact for negative values as well.
BigInt floor_rat(const BigRational& q);

BigInt int_pow(const BigInt& base, unsigned exp);

// base^exp with integer exp; exp < 0 requires base != 0.
BigRational rat_pow(const BigRational& base, long exp);

BigInt factorial(unsigned n);

// C(n, r); zero outside 0 <= r <= n. Requires n >= 0.
BigInt binomial(long n, long r);

// Number of permutations of {1..n} with exactly m descents, via the
// recurrence A(n,m) = (m+1) A(n-1,m) + (n-m) A(n-1,m-1).
// Requires 0 <= m < n.
BigInt eulerian(unsigned n, unsigned m);

// Accepts "p", "p/q" and plain decimal strings like "-2.5" (converted
// exactly, denominator a power of 10). Throws std::invalid_argument on
// anything else.
BigRational parse_rational(const std::string& text);

// "p/q" in lowest terms, or just "p" for integers.
std::string to_string(const BigRational& q);

// Decimal rendering for display only: exact long division, round half away
// from zero at max_frac_digits, trailing zeros trimmed.
std::string decimal_string(const BigRational& q, int max_frac_digits = 12);

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace polyball

#pragma once

#include "polyball/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace polyball {

// Splits n >= 0 as s^2 * m with m squarefree; returns {s, m}.
// Trial division by small primes plus a perfect-square check; throws
// std::domain_error if the remaining cofactor is too large to certify
// squarefree (far beyond every radicand arising here).
std::pair<BigInt, BigInt> extract_square(const BigInt& n);

// Exact value sum_i q_i * sqrt(n_i) with rational coefficients q_i and
// squarefree integer radicands n_i >= 1; radicand 1 holds the rational part.
// Radicands are reduced to squarefree form on construction (sqrt(8) becomes
// 2 sqrt(2)) and zero coefficients are dropped, so equality is termwise.
class SurdValue {
 public:
  SurdValue() = default;
  SurdValue(const BigRational& rational);  // NOLINT: rationals embed implicitly
  SurdValue(long value) : SurdValue(BigRational(value)) {}

  // coeff * sqrt(radicand); requires radicand >= 0 (sqrt(0) gives zero).
  static SurdValue term(const BigRational& coeff, const BigInt& radicand);
  // sqrt of a nonnegative rational: sqrt(p/q) = sqrt(p q) / q, normalized.
  static SurdValue sqrt_of(const BigRational& value);

  SurdValue& operator+=(const SurdValue& other);
  SurdValue& operator-=(const SurdValue& other);
  SurdValue operator+(const SurdValue& other) const;
  SurdValue operator-(const SurdValue& other) const;
  SurdValue operator-() const;
  // Full product; cross terms use sqrt(a) sqrt(b) = gcd(a,b) sqrt(ab/gcd^2).
  SurdValue operator*(const SurdValue& other) const;
  SurdValue scaled(const BigRational& factor) const;

  bool operator==(const SurdValue& other) const { return terms_ == other.terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  BigRational rational_part() const;
  BigRational coefficient(const BigInt& radicand) const;
  const std::map<BigInt, BigRational>& terms() const { return terms_; }

  double to_double() const;
  // Canonical text: terms by ascending radicand, rational part first,
  // e.g. "12 + 4*sqrt(3)", "1/2*sqrt(2)", "-1/2 + sqrt(2)", "0".
  std::string to_string() const;

 private:
  void add_term(const BigRational& coeff, const BigInt& radicand);

  std::map<BigInt, BigRational> terms_;
};

}  // namespace polyball

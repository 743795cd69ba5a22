#include "polyball/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace polyball {

namespace {

constexpr long kTrialBound = 1000000;

}  // namespace

std::pair<BigInt, BigInt> extract_square(const BigInt& n) {
  if (n < 0) throw std::domain_error("extract_square: negative argument");
  if (n == 0) return {BigInt(1), BigInt(0)};
  BigInt outer = 1;
  BigInt rem = n;
  {
    const BigInt root = boost::multiprecision::sqrt(rem);
    if (root * root == rem) return {root, BigInt(1)};
  }
  auto strip = [&](long p) {
    const BigInt pp = BigInt(p) * p;
    while (rem % pp == 0) {
      rem /= pp;
      outer *= p;
    }
  };
  strip(2);
  strip(3);
  // Remaining prime candidates are of the form 6k +/- 1.
  for (long p = 5; p <= kTrialBound && BigInt(p) * p <= rem; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rem > 1) {
    const BigInt root = boost::multiprecision::sqrt(rem);
    if (root * root == rem) {
      outer *= root;
      rem = 1;
    } else if (rem > BigInt(kTrialBound) * kTrialBound) {
      // All factors of rem exceed the trial bound, so rem <= bound^2 would
      // force it squarefree; beyond that we cannot certify.
      throw std::domain_error("extract_square: cofactor too large to certify squarefree");
    }
  }
  return {outer, rem};
}

SurdValue::SurdValue(const BigRational& rational) {
  if (rational != 0) terms_.emplace(BigInt(1), rational);
}

void SurdValue::add_term(const BigRational& coeff, const BigInt& radicand) {
  if (coeff == 0 || radicand == 0) return;
  auto [it, inserted] = terms_.emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SurdValue SurdValue::term(const BigRational& coeff, const BigInt& radicand) {
  if (radicand < 0) throw std::domain_error("SurdValue: negative radicand");
  SurdValue v;
  if (radicand == 0 || coeff == 0) return v;
  auto [outer, squarefree] = extract_square(radicand);
  v.add_term(coeff * BigRational(outer), squarefree);
  return v;
}

SurdValue SurdValue::sqrt_of(const BigRational& value) {
  if (value < 0) throw std::domain_error("SurdValue: sqrt of negative value");
  const BigInt p = numerator(value);
  const BigInt q = denominator(value);
  return term(make_rational(1, q), p * q);
}

SurdValue& SurdValue::operator+=(const SurdValue& other) {
  for (const auto& [rad, coeff] : other.terms_) add_term(coeff, rad);
  return *this;
}

SurdValue& SurdValue::operator-=(const SurdValue& other) {
  for (const auto& [rad, coeff] : other.terms_) add_term(-coeff, rad);
  return *this;
}

SurdValue SurdValue::operator+(const SurdValue& other) const {
  SurdValue v = *this;
  v += other;
  return v;
}

SurdValue SurdValue::operator-(const SurdValue& other) const {
  SurdValue v = *this;
  v -= other;
  return v;
}

SurdValue SurdValue::operator-() const {
  SurdValue v;
  for (const auto& [rad, coeff] : terms_) v.terms_.emplace(rad, -coeff);
  return v;
}

SurdValue SurdValue::operator*(const SurdValue& other) const {
  SurdValue v;
  for (const auto& [ra, ca] : terms_) {
    for (const auto& [rb, cb] : other.terms_) {
      // ra, rb squarefree: sqrt(ra) sqrt(rb) = g sqrt((ra/g)(rb/g)), g = gcd.
      const BigInt g = boost::multiprecision::gcd(ra, rb);
      v.add_term(ca * cb * BigRational(g), (ra / g) * (rb / g));
    }
  }
  return v;
}

SurdValue SurdValue::scaled(const BigRational& factor) const {
  SurdValue v;
  if (factor == 0) return v;
  for (const auto& [rad, coeff] : terms_) v.terms_.emplace(rad, coeff * factor);
  return v;
}

bool SurdValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

BigRational SurdValue::rational_part() const { return coefficient(BigInt(1)); }

BigRational SurdValue::coefficient(const BigInt& radicand) const {
  const auto it = terms_.find(radicand);
  return it == terms_.end() ? BigRational(0) : it->second;
}

double SurdValue::to_double() const {
  double total = 0.0;
  for (const auto& [rad, coeff] : terms_)
    total += polyball::to_double(coeff) * std::sqrt(rad.convert_to<double>());
  return total;
}

std::string SurdValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [rad, coeff] : terms_) {
    const bool negative = coeff < 0;
    const BigRational mag = negative ? BigRational(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (rad == 1) {
      out += polyball::to_string(mag);
    } else {
      if (mag != 1) out += polyball::to_string(mag) + "*";
      out += "sqrt(" + rad.str() + ")";
    }
  }
  return out;
}

}  // namespace polyball

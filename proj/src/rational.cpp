#include "polyball/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace polyball {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  // Division normalizes to lowest terms with a positive denominator.
  return BigRational(num) / BigRational(den);
}

bool is_integer(const BigRational& q) { return denominator(q) == 1; }

BigInt floor_rat(const BigRational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (num >= 0) return num / den;
  return -((-num + den - 1) / den);
}

BigInt int_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

BigRational rat_pow(const BigRational& base, long exp) {
  if (exp == 0) return BigRational(1);
  if (exp > 0) {
    return make_rational(int_pow(numerator(base), static_cast<unsigned>(exp)),
                         int_pow(denominator(base), static_cast<unsigned>(exp)));
  }
  if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
  return make_rational(int_pow(denominator(base), static_cast<unsigned>(-exp)),
                       int_pow(numerator(base), static_cast<unsigned>(-exp)));
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(long n, long r) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt c = 1;
  for (long j = 1; j <= r; ++j) {
    c *= n - r + j;
    c /= j;  // divides exactly: c is C(n-r+j, j) at this point
  }
  return c;
}

BigInt eulerian(unsigned n, unsigned m) {
  if (n == 0 || m >= n) throw std::domain_error("eulerian: requires 0 <= m < n");
  std::vector<BigInt> row{1};  // A(1, 0)
  for (unsigned nn = 2; nn <= n; ++nn) {
    std::vector<BigInt> next(nn, BigInt(0));
    for (unsigned mm = 0; mm < nn; ++mm) {
      if (mm < row.size()) next[mm] += BigInt(mm + 1) * row[mm];
      if (mm >= 1 && mm - 1 < row.size()) next[mm] += BigInt(nn - mm) * row[mm - 1];
    }
    row = std::move(next);
  }
  return row[m];
}

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty number");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("parse_rational: bare sign");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("parse_rational: bad digit in '" + s + "'");
  return BigInt(s);
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    if (text.find('/', slash + 1) != std::string::npos ||
        text.find('.') != std::string::npos)
      throw std::invalid_argument("parse_rational: malformed '" + text + "'");
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return make_rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return BigRational(parse_integer(text));
  std::string head = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty()) throw std::invalid_argument("parse_rational: trailing point");
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("parse_rational: bad digit in '" + text + "'");
  bool negative = false;
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
    negative = head[0] == '-';
    head = head.substr(1);
  }
  const BigInt whole = head.empty() ? BigInt(0) : parse_integer(head);
  const BigInt scale = int_pow(BigInt(10), static_cast<unsigned>(frac.size()));
  BigInt num = whole * scale + BigInt(frac);
  if (negative) num = -num;
  return make_rational(num, scale);
}

std::string to_string(const BigRational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string decimal_string(const BigRational& q, int max_frac_digits) {
  if (max_frac_digits < 0) max_frac_digits = 0;
  const bool negative = q < 0;
  BigInt num = negative ? BigInt(-numerator(q)) : numerator(q);
  const BigInt den = denominator(q);
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string digits;
  digits.reserve(static_cast<std::size_t>(max_frac_digits));
  for (int i = 0; i < max_frac_digits && rem != 0; ++i) {
    rem *= 10;
    const BigInt digit = rem / den;
    digits.push_back(static_cast<char>('0' + digit.convert_to<int>()));
    rem %= den;
  }
  // Round half away from zero on the first dropped digit.
  if (rem != 0 && rem * 2 >= den) {
    int i = static_cast<int>(digits.size()) - 1;
    for (; i >= 0; --i) {
      if (digits[i] != '9') {
        ++digits[i];
        break;
      }
      digits[i] = '0';
    }
    if (i < 0) whole += 1;
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  std::string out = whole.str();
  if (!digits.empty()) out += "." + digits;
  if (negative && (whole != 0 || !digits.empty())) out = "-" + out;
  return out;
}

}  // namespace polyball

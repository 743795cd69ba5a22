#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyball/oracle.hpp"
#include "polyball/params.hpp"
#include "polyball/rational.hpp"
#include "polyball/surd.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace polyball;

namespace {

// Independent oracle: count permutations of {1..n} by number of descents.
BigInt descent_count(int n, int descents) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  BigInt count = 0;
  do {
    int found = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i + 1)]) ++found;
    if (found == descents) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(50, 25) == BigInt("126410606437752"));
}

TEST_CASE("binomial symmetry") {
  for (long n = 0; n <= 24; ++n)
    for (long r = 0; r <= n; ++r) CHECK(binomial(n, r) == binomial(n, n - r));
}

TEST_CASE("eulerian against the descent-count oracle") {
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m < n; ++m)
      CHECK(eulerian(static_cast<unsigned>(n), static_cast<unsigned>(m)) == descent_count(n, m));
  // Frozen values confirmed by the oracle above.
  CHECK(eulerian(3, 1) == 4);
  CHECK(eulerian(4, 1) == 11);
  CHECK(eulerian(9, 0) == 1);
}

TEST_CASE("eulerian rows sum to n!") {
  for (unsigned n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (unsigned m = 0; m < n; ++m) sum += eulerian(n, m);
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("eulerian domain errors") {
  CHECK_THROWS_AS(eulerian(3, 3), std::domain_error);
  CHECK_THROWS_AS(eulerian(0, 0), std::domain_error);
}

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("5/2") == make_rational(5, 2));
  CHECK(parse_rational("-0.125") == make_rational(-1, 8));
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("2.5") == make_rational(5, 2));
  CHECK(parse_rational("-7/4") == make_rational(-7, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);

  CHECK(to_string(make_rational(20, 3)) == "20/3");
  CHECK(to_string(make_rational(-20, 4)) == "-5");
  CHECK(decimal_string(make_rational(1, 8)) == "0.125");
  CHECK(decimal_string(make_rational(20, 3), 6) == "6.666667");
  CHECK(decimal_string(make_rational(-1, 3), 4) == "-0.3333");
  CHECK(decimal_string(BigRational(0)) == "0");
}

TEST_CASE("floor and integrality") {
  CHECK(floor_rat(make_rational(7, 2)) == 3);
  CHECK(floor_rat(make_rational(-7, 2)) == -4);
  CHECK(floor_rat(BigRational(4)) == 4);
  CHECK(is_integer(make_rational(6, 3)));
  CHECK_FALSE(is_integer(make_rational(6, 4)));
}

TEST_CASE("rational powers") {
  CHECK(rat_pow(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(rat_pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(rat_pow(make_rational(5, 7), 0) == 1);
  CHECK(rat_pow(BigRational(0), 4) == 0);
  CHECK_THROWS_AS(rat_pow(BigRational(0), -1), std::domain_error);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params(3, make_rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(Params(3, BigRational(4)), std::domain_error);
  CHECK_THROWS_AS(Params(0, BigRational(1)), std::domain_error);
  const Params p(4, make_rational(5, 2));
  CHECK(p.floor_k() == 2);
  CHECK_FALSE(p.k_is_integer());
  CHECK(Params(4, make_rational(8, 4)).k_as_integer() == 2);
}

TEST_CASE("surd normalization") {
  CHECK(SurdValue::term(BigRational(2), BigInt(8)) == SurdValue::term(BigRational(4), BigInt(2)));
  CHECK(SurdValue::sqrt_of(BigRational(144)) == SurdValue(BigRational(12)));
  CHECK(SurdValue::sqrt_of(make_rational(1, 4)) == SurdValue(make_rational(1, 2)));
  CHECK(SurdValue::term(BigRational(1), BigInt(12)).to_string() == "2*sqrt(3)");
  const auto [s, m] = extract_square(BigInt(360));  // 6^2 * 10
  CHECK(s == 6);
  CHECK(m == 10);
}

TEST_CASE("surd arithmetic") {
  SurdValue a(BigRational(3));
  a += SurdValue::term(BigRational(2), BigInt(3));
  SurdValue b(BigRational(1));
  b += SurdValue::term(BigRational(-2), BigInt(3));
  CHECK(a + b == SurdValue(BigRational(4)));
  CHECK(SurdValue::term(BigRational(1), BigInt(2)) + SurdValue::term(BigRational(1), BigInt(3)) ==
        SurdValue::term(BigRational(1), BigInt(3)) + SurdValue::term(BigRational(1), BigInt(2)));
  CHECK(SurdValue::sqrt_of(BigRational(2)) * SurdValue::sqrt_of(BigRational(3)) ==
        SurdValue::sqrt_of(BigRational(6)));
  CHECK(SurdValue::sqrt_of(BigRational(2)) * SurdValue::sqrt_of(BigRational(2)) ==
        SurdValue(BigRational(2)));
  CHECK((SurdValue::sqrt_of(BigRational(8))).scaled(BigRational(2)).to_string() == "4*sqrt(2)");
}

TEST_CASE("surd associativity on random values") {
  XorShift64Star rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_surd = [&rng] {
      SurdValue v;
      for (int t = 0; t < 3; ++t) {
        const long num = static_cast<long>(rng.next() % 19) - 9;
        const long den = 1 + static_cast<long>(rng.next() % 6);
        const long rad = static_cast<long>(rng.next() % 30);
        v += SurdValue::term(make_rational(num, den), BigInt(rad));
      }
      return v;
    };
    const SurdValue a = random_surd();
    const SurdValue b = random_surd();
    const SurdValue c = random_surd();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("surd rendering is canonical") {
  SurdValue v(BigRational(12));
  v += SurdValue::term(BigRational(4), BigInt(3));
  CHECK(v.to_string() == "12 + 4*sqrt(3)");
  SurdValue w = SurdValue(make_rational(-1, 2)) + SurdValue::term(BigRational(1), BigInt(2));
  CHECK(w.to_string() == "-1/2 + sqrt(2)");
  CHECK(SurdValue().to_string() == "0");
  CHECK(SurdValue::term(make_rational(1, 2), BigInt(2)).to_string() == "1/2*sqrt(2)");
  SurdValue neg = SurdValue(BigRational(12)) - SurdValue::term(BigRational(4), BigInt(3));
  CHECK(neg.to_string() == "12 - 4*sqrt(3)");
}

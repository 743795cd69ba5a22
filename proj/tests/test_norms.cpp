#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyball/combinatorics.hpp"
#include "polyball/norms.hpp"
#include "polyball/oracle.hpp"

#include <cmath>

using namespace polyball;

namespace {

VectorQ vec(std::initializer_list<long> values) {
  VectorQ x;
  for (long v : values) x.push_back(BigRational(v));
  return x;
}

VectorQ random_vector(XorShift64Star& rng, int d) {
  VectorQ x(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const long num = static_cast<long>(rng.next() % 17) - 8;
    const long den = 1 + static_cast<long>(rng.next() % 4);
    x[static_cast<std::size_t>(i)] = make_rational(num, den);
  }
  return x;
}

std::vector<BigRational> k_grid(int d) {
  std::vector<BigRational> grid;
  for (long j = 2; j <= 2L * d; ++j) grid.push_back(make_rational(j, 2));
  return grid;
}

}  // namespace

TEST_CASE("knorm closed form on the worked examples") {
  const VectorQ x = vec({3, 1, -2});
  CHECK(knorm(x, Params(3, 2)) == 5);
  CHECK(knorm(x, Params(3, make_rational(5, 2))) == make_rational(11, 2));
  CHECK(knorm(x, Params(3, 1)) == 3);  // max-norm
  CHECK(knorm(x, Params(3, 3)) == 6);  // 1-norm
  CHECK(knorm_variational(x, Params(3, 2)) == 5);
  CHECK(knorm_variational(x, Params(3, make_rational(5, 2))) == make_rational(11, 2));
  CHECK(knorm_variational(vec({1, 0, 0}), Params(3, make_rational(3, 2))) == 1);
  CHECK(knorm_variational(vec({0, 0, 0}), Params(3, 2)) == 0);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(knorm(vec({1, 2}), Params(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(dual_norm(vec({1, 2}), Params(3, 2)), std::invalid_argument);
}

TEST_CASE("closed form equals variational scan exactly (rational path)") {
  XorShift64Star rng(11);
  for (int d = 1; d <= 8; ++d) {
    for (const BigRational& k : k_grid(d)) {
      const Params p(d, k);
      for (int trial = 0; trial < 25; ++trial) {
        const VectorQ x = random_vector(rng, d);
        CHECK(knorm(x, p) == knorm_variational(x, p));
      }
    }
  }
}

TEST_CASE("closed form matches variational scan on the float path") {
  XorShift64Star rng(13);
  for (int d = 1; d <= 8; ++d) {
    for (const BigRational& k : k_grid(d)) {
      const Params p(d, k);
      for (int trial = 0; trial < 10; ++trial) {
        VectorD x(static_cast<std::size_t>(d));
        for (double& c : x) c = 10.0 * (2.0 * rng.next_unit() - 1.0);
        CHECK(std::abs(knorm(x, p) - knorm_variational(x, p)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("dual norm on the worked examples") {
  CHECK(dual_norm(vec({1, 1, 1}), Params(3, 2)) == make_rational(3, 2));
  CHECK(dual_norm(vec({1, 0, 0}), Params(3, 2)) == 1);
  CHECK(dual_norm(vec({1, 0, 0}), Params(3, make_rational(5, 2))) == 1);
  const VectorQ x = vec({3, 1, -2});
  CHECK(dual_norm(x, Params(3, 1)) == 6);  // 1-norm
  CHECK(dual_norm(x, Params(3, 3)) == 3);  // max-norm
}

TEST_CASE("support over the vertices of one ball is the other norm") {
  XorShift64Star rng(17);
  for (int d = 1; d <= 5; ++d) {
    for (const BigRational& k : k_grid(d)) {
      const Params p(d, k);
      const PolytopeRep rho = rep_rho(p);
      for (int trial = 0; trial < 8; ++trial) {
        const VectorQ x = random_vector(rng, d);
        BigRational support = 0;
        for (const VectorQ& v : rho.vertices) support = std::max(support, dot(x, v));
        CHECK(support == dual_norm(x, p));
      }
      if (p.k_is_integer()) {
        const PolytopeRep star = rep_rho_star(p);
        for (int trial = 0; trial < 8; ++trial) {
          const VectorQ x = random_vector(rng, d);
          BigRational support = 0;
          for (const VectorQ& v : star.vertices) support = std::max(support, dot(x, v));
          CHECK(support == knorm(x, p));
        }
      }
    }
  }
}

TEST_CASE("norm axioms hold exactly on random inputs") {
  XorShift64Star rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 1 + static_cast<int>(rng.next() % 6);
    const auto grid = k_grid(d);
    const Params p(d, grid[rng.next() % grid.size()]);
    const VectorQ x = random_vector(rng, d);
    const VectorQ y = random_vector(rng, d);
    VectorQ sum(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
    CHECK(knorm(sum, p) <= knorm(x, p) + knorm(y, p));
    CHECK(dual_norm(sum, p) <= dual_norm(x, p) + dual_norm(y, p));
    const BigRational lambda = make_rational(static_cast<long>(rng.next() % 11) - 5, 2);
    VectorQ scaled(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = lambda * x[i];
    CHECK(knorm(scaled, p) == abs(lambda) * knorm(x, p));
    CHECK(dual_norm(scaled, p) == abs(lambda) * dual_norm(x, p));
  }
}

TEST_CASE("knorm interpolates monotonically from max-norm to 1-norm") {
  XorShift64Star rng(23);
  for (int d = 1; d <= 8; ++d) {
    for (int trial = 0; trial < 12; ++trial) {
      const VectorQ x = random_vector(rng, d);
      BigRational linf = 0, l1 = 0;
      for (const BigRational& c : x) {
        const BigRational a = abs(c);
        l1 += a;
        if (a > linf) linf = a;
      }
      CHECK(knorm(x, Params(d, 1)) == linf);
      CHECK(knorm(x, Params(d, d)) == l1);
      BigRational previous = linf;
      for (const BigRational& k : k_grid(d)) {
        const BigRational current = knorm(x, Params(d, k));
        CHECK(current >= previous);
        previous = current;
      }
    }
  }
}

TEST_CASE("zero norm counts nonzero coordinates") {
  CHECK(zero_norm(vec({3, 0, -2})) == 2);
  CHECK(zero_norm(vec({0, 0, 0})) == 0);
  CHECK(zero_norm(vec({1, 1, 1, 1})) == 4);
}

TEST_CASE("sparsity gap examples and equivalence") {
  CHECK(sparsity_gap(vec({3, 0, -2}), 2, 3) == 0);
  CHECK(sparsity_gap(vec({3, 1, -2}), 2, 3) == -1);
  CHECK(sparsity_gap(vec({0, 0, 0}), 1, 3) == 0);
  CHECK_THROWS_AS(sparsity_gap(vec({1, 2, 3}), 2, 2), std::domain_error);
  CHECK_THROWS_AS(sparsity_gap(vec({1, 2, 3}), 0, 2), std::domain_error);

  // gap = 0 exactly when the support has at most k coordinates; exhaustive
  // over sign vectors in low dimensions.
  for (int d = 2; d <= 6; ++d) {
    const long total = int_pow(3, static_cast<unsigned>(d)).convert_to<long>();
    for (long code = 0; code < total; ++code) {
      VectorQ x(static_cast<std::size_t>(d));
      long rest = code;
      for (int i = 0; i < d; ++i) {
        x[static_cast<std::size_t>(i)] = BigRational(rest % 3 - 1);
        rest /= 3;
      }
      for (long k = 1; k < d; ++k) {
        const BigRational gap = sparsity_gap(x, k, d);
        CHECK(gap <= 0);
        CHECK((gap == 0) == (zero_norm(x) <= k));
      }
    }
  }
}

TEST_CASE("membership classification, exact path") {
  CHECK(member_rho(vec({1, 0, 0}), Params(3, 2)) == Region::boundary);
  CHECK(member_rho(VectorQ{make_rational(1, 2), make_rational(1, 2), BigRational(0)},
                   Params(3, 2)) == Region::boundary);
  CHECK(member_rho(VectorQ{make_rational(3, 5), make_rational(3, 5), BigRational(0)},
                   Params(3, 2)) == Region::exterior);
  CHECK(member_rho(vec({0, 0, 0}), Params(3, 2)) == Region::interior);

  CHECK(member_rho_star(vec({1, 1, 0}), Params(3, 2)) == Region::boundary);
  CHECK(member_rho_star(vec({1, 1, 1}), Params(3, 2)) == Region::exterior);
  CHECK(member_rho_star(vec({0, 0, 0}), Params(3, 2)) == Region::interior);
}

TEST_CASE("membership tracks the gauges") {
  XorShift64Star rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng.next() % 6);
    const auto grid = k_grid(d);
    const Params p(d, grid[rng.next() % grid.size()]);
    VectorQ x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      x[static_cast<std::size_t>(i)] = make_rational(static_cast<long>(rng.next() % 9) - 4,
                                                     1 + static_cast<long>(rng.next() % 6));
    CHECK(is_member(member_rho(x, p)) == (knorm(x, p) <= 1));
    CHECK(is_member(member_rho_star(x, p)) == (dual_norm(x, p) <= 1));
  }
}

TEST_CASE("float membership uses the tolerance band") {
  const Params p(3, 2);
  CHECK(member_rho(VectorD{0.5, 0.5 + 1e-15, 0.0}, p) == Region::boundary);
  CHECK(member_rho(VectorD{0.5, 0.51, 0.0}, p, 1e-12) == Region::exterior);
  CHECK(member_rho(VectorD{0.1, 0.2, 0.0}, p) == Region::interior);
}

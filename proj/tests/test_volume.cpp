#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyball/oracle.hpp"
#include "polyball/volume.hpp"

using namespace polyball;

namespace {

SurdValue surd(long rational, long coeff, long radicand) {
  SurdValue v{BigRational(rational)};
  v += SurdValue::term(BigRational(coeff), BigInt(radicand));
  return v;
}

std::vector<BigRational> k_grid(int d) {
  std::vector<BigRational> grid;
  for (long j = 2; j <= 2L * d; ++j) grid.push_back(make_rational(j, 2));
  return grid;
}

}  // namespace

TEST_CASE("apex distances") {
  CHECK(apex_distance(BigRational(2), 1, 0) == SurdValue(BigRational(1)));
  CHECK(apex_distance(BigRational(2), 2, 0) == SurdValue::sqrt_of(BigRational(2)));
  // k = l simplifies to k sqrt((k-i-1)/(k-i))
  for (long k = 2; k <= 6; ++k) {
    for (int i = 0; i + 1 < k; ++i) {
      const SurdValue expected =
          SurdValue::sqrt_of(make_rational(k - i - 1, k - i)).scaled(BigRational(k));
      CHECK(apex_distance(BigRational(k), static_cast<int>(k), i) == expected);
    }
  }
  CHECK_THROWS_AS(apex_distance(BigRational(2), 3, 0), std::domain_error);
  CHECK_THROWS_AS(apex_distance(BigRational(2), 2, 2), std::domain_error);
  CHECK_THROWS_AS(apex_distance(BigRational(2), 2, 1), std::domain_error);  // zero radicand
}

TEST_CASE("piece volumes") {
  CHECK(piece_volume(3, BigRational(2), 0) == 8);  // the whole cube
  CHECK(piece_volume(5, make_rational(7, 2), 0) == 32);
  CHECK(piece_volume(2, BigRational(2), 1) == 1);
  CHECK(piece_volume(3, BigRational(2), 1) == make_rational(4, 3));
  CHECK(piece_volume(3, BigRational(3), 3) == 0);  // l = k
  CHECK_THROWS_AS(piece_volume(3, BigRational(2), 3), std::domain_error);
}

TEST_CASE("piece decomposition sums to the dilated volume") {
  for (int d = 1; d <= 8; ++d) {
    for (const BigRational& k : k_grid(d)) {
      const Params p(d, k);
      BigRational total = 0;
      for (long l = 0; l <= p.floor_k(); ++l)
        total += BigRational(int_pow(2, static_cast<unsigned>(l)) * binomial(d, l)) *
                 piece_volume(d, k, static_cast<int>(l));
      CHECK(total == rat_pow(k, d) * volume_rho(p));
    }
  }
}

TEST_CASE("volume of rho") {
  for (int d = 2; d <= 12; ++d) CHECK(volume_rho(Params(d, 2)) == 2);
  for (int d = 1; d <= 8; ++d)
    for (const BigRational& k : k_grid(d))
      CHECK(volume_rho_unsummed(Params(d, k)) == volume_rho(Params(d, k)));
  for (int d = 1; d <= 8; ++d) {
    CHECK(volume_rho(Params(d, 1)) == int_pow(2, static_cast<unsigned>(d)));
    CHECK(volume_rho(Params(d, d)) ==
          make_rational(int_pow(2, static_cast<unsigned>(d)), factorial(static_cast<unsigned>(d))));
  }
  CHECK(volume_rho(Params(3, make_rational(5, 2))) == make_rational(8, 5));
}

TEST_CASE("facet volume of rho: printed vs corrected") {
  {
    const auto f = facet_volume_rho(3, 1);
    CHECK(f.corrected == SurdValue(BigRational(4)));
    CHECK(f.as_printed == SurdValue(make_rational(4, 3)));
  }
  {
    const auto f = facet_volume_rho(2, 2);
    CHECK(f.corrected == SurdValue::sqrt_of(BigRational(2)));
    CHECK(f.as_printed == SurdValue::sqrt_of(BigRational(2)).scaled(make_rational(1, 2)));
  }
  {
    const auto f = facet_volume_rho(3, 2);
    CHECK(f.corrected == SurdValue::term(make_rational(1, 2), BigInt(2)));  // sqrt(2)/2
  }
}

TEST_CASE("boundary volume of rho: printed vs corrected") {
  {
    const auto b = boundary_volume_rho(Params(3, 1));
    CHECK(b.corrected == SurdValue(BigRational(24)));
    CHECK(b.as_printed == SurdValue(BigRational(8)));
  }
  {
    const auto b = boundary_volume_rho(Params(3, 2));
    CHECK(b.corrected == SurdValue::term(BigRational(6), BigInt(2)));  // 6 sqrt(2)
  }
  for (int d = 1; d <= 8; ++d) {
    const auto b = boundary_volume_rho(Params(d, d));
    const SurdValue cross = SurdValue::term(
        make_rational(int_pow(2, static_cast<unsigned>(d)), factorial(static_cast<unsigned>(d - 1))),
        BigInt(d));
    CHECK(b.corrected == cross);
    CHECK(b.corrected == b.as_printed.scaled(BigRational(d)));
  }
  CHECK_THROWS_AS(boundary_volume_rho(Params(3, make_rational(3, 2))), std::domain_error);
}

TEST_CASE("half-space cube volumes") {
  CHECK(halfspace_cube_volume(VectorQ{BigRational(1)}, make_rational(1, 2)) == make_rational(1, 2));
  CHECK(halfspace_cube_volume(VectorQ{BigRational(1), BigRational(1)}, BigRational(1)) ==
        make_rational(1, 2));
  CHECK(halfspace_cube_volume(VectorQ{BigRational(1), BigRational(1), BigRational(1)},
                              make_rational(3, 2)) == make_rational(1, 2));
  // whole cube and empty intersection
  CHECK(halfspace_cube_volume(VectorQ{BigRational(1), BigRational(1)}, BigRational(5)) == 1);
  CHECK(halfspace_cube_volume(VectorQ{BigRational(1), BigRational(1)}, BigRational(-1)) == 0);
  CHECK_THROWS_AS(halfspace_cube_volume(VectorQ{BigRational(0), BigRational(1)}, BigRational(1)),
                  std::domain_error);
  // the 2^d vertex walk is capped
  CHECK_THROWS_AS(halfspace_cube_volume(VectorQ(26, BigRational(1)), BigRational(1)),
                  std::length_error);
  CHECK_THROWS_AS(cube_section_volume(VectorQ(26, BigRational(1)), BigRational(1)),
                  std::length_error);
}

TEST_CASE("half-space complement identity on random directions") {
  XorShift64Star rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + static_cast<int>(rng.next() % 5);
    VectorQ a(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      long v = static_cast<long>(rng.next() % 13) - 6;
      if (v == 0) v = 3;
      a[static_cast<std::size_t>(i)] = make_rational(v, 1 + static_cast<long>(rng.next() % 3));
    }
    const BigRational c =
        make_rational(static_cast<long>(rng.next() % 17) - 8, 1 + static_cast<long>(rng.next() % 4));
    VectorQ neg = a;
    for (BigRational& v : neg) v = -v;
    CHECK(halfspace_cube_volume(a, c) + halfspace_cube_volume(neg, -c) == 1);
  }
}

TEST_CASE("orthant volume of the dual") {
  for (int d = 1; d <= 8; ++d) CHECK(orthant_volume_rho_star(Params(d, d)) == 1);
  CHECK(orthant_volume_rho_star(Params(3, make_rational(3, 2))) == make_rational(1, 2));
  // equals the half-space formula with the all-ones normal
  for (int d = 1; d <= 10; ++d) {
    for (const BigRational& k : k_grid(d)) {
      const VectorQ ones(static_cast<std::size_t>(d), BigRational(1));
      CHECK(orthant_volume_rho_star(Params(d, k)) == halfspace_cube_volume(ones, k));
    }
  }
  // Eulerian decomposition for integer k
  for (int d = 1; d <= 10; ++d) {
    for (long k = 1; k <= d; ++k) {
      BigRational sum = 0;
      for (long l = 0; l < k; ++l)
        sum += BigRational(eulerian(static_cast<unsigned>(d), static_cast<unsigned>(l)));
      CHECK(orthant_volume_rho_star(Params(d, k)) ==
            sum / BigRational(factorial(static_cast<unsigned>(d))));
    }
  }
}

TEST_CASE("volume of the dual") {
  CHECK(volume_rho_star(Params(3, 2)) == make_rational(20, 3));
  for (int d = 1; d <= 8; ++d) {
    CHECK(volume_rho_star(Params(d, 1)) ==
          make_rational(int_pow(2, static_cast<unsigned>(d)), factorial(static_cast<unsigned>(d))));
    CHECK(volume_rho_star(Params(d, d)) == int_pow(2, static_cast<unsigned>(d)));
  }
}

TEST_CASE("cube sections") {
  // diagonal of the square
  CHECK(cube_section_volume(VectorQ{BigRational(1), BigRational(1)}, BigRational(0)) ==
        SurdValue::term(BigRational(2), BigInt(2)));
  // regular hexagon section of [-1,1]^3: computed by the exact 2D
  // triangulation oracle (side sqrt(2), area 3 sqrt(3)).
  CHECK(cube_section_volume(VectorQ{BigRational(1), BigRational(1), BigRational(1)},
                            BigRational(0)) == SurdValue::term(BigRational(3), BigInt(3)));
  // section through a corner degenerates
  CHECK(cube_section_volume(VectorQ{BigRational(1), BigRational(1)}, BigRational(2)).is_zero());
  CHECK_THROWS_AS(cube_section_volume(VectorQ{BigRational(1)}, BigRational(0)), std::domain_error);
  CHECK_THROWS_AS(cube_section_volume(VectorQ{BigRational(1), BigRational(0)}, BigRational(0)),
                  std::domain_error);
}

TEST_CASE("cube section scaling invariance") {
  XorShift64Star rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng.next() % 4);
    VectorQ a(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      long v = static_cast<long>(rng.next() % 9) - 4;
      if (v == 0) v = 2;
      a[static_cast<std::size_t>(i)] = v;
    }
    const BigRational c = make_rational(static_cast<long>(rng.next() % 9) - 4, 1);
    const BigRational lambda =
        make_rational(1 + static_cast<long>(rng.next() % 6), 1 + static_cast<long>(rng.next() % 3));
    VectorQ scaled = a;
    for (BigRational& v : scaled) v *= lambda;
    CHECK(cube_section_volume(a, c) == cube_section_volume(scaled, c * lambda));
  }
}

TEST_CASE("hypersimplex slices") {
  CHECK(slice_volume_delta(2, BigRational(1)) == SurdValue::sqrt_of(BigRational(2)));
  CHECK(slice_volume_delta(3, BigRational(1)) ==
        SurdValue::term(make_rational(1, 2), BigInt(3)));
  CHECK(slice_volume_delta(3, make_rational(3, 2)) ==
        SurdValue::term(make_rational(3, 4), BigInt(3)));
  CHECK(slice_volume_delta(3, BigRational(0)).is_zero());
  CHECK(slice_volume_delta(3, BigRational(3)).is_zero());
  CHECK_THROWS_AS(slice_volume_delta(3, BigRational(4)), std::domain_error);
  CHECK_THROWS_AS(slice_volume_delta(3, BigRational(-1)), std::domain_error);
  // consistency with the centered section: scaling [0,1]^d onto [-1,1]^d
  for (int d = 2; d <= 6; ++d) {
    const VectorQ ones(static_cast<std::size_t>(d), BigRational(1));
    for (long j = 1; j < 2L * d; ++j) {
      const BigRational k = make_rational(j, 2);
      CHECK(cube_section_volume(ones, 2 * k - d) ==
            slice_volume_delta(d, k).scaled(BigRational(int_pow(2, static_cast<unsigned>(d - 1)))));
    }
  }
}

TEST_CASE("boundary volume of the dual") {
  CHECK(boundary_volume_rho_star(Params(3, 2)) == surd(12, 4, 3));
  for (int d = 2; d <= 8; ++d) {
    CHECK(boundary_volume_rho_star(Params(d, d)) ==
          SurdValue(BigRational(d) * BigRational(int_pow(2, static_cast<unsigned>(d)))));
    CHECK(boundary_volume_rho_star(Params(d, 1)) ==
          SurdValue::term(make_rational(int_pow(2, static_cast<unsigned>(d)),
                                        factorial(static_cast<unsigned>(d - 1))),
                          BigInt(d)));
  }
}

TEST_CASE("dual boundary facet decomposition") {
  for (int d = 2; d <= 10; ++d) {
    for (long k = 1; k <= d; ++k) {
      const Params p(d, k);
      SurdValue rhs =
          slice_volume_delta(d, p.k()).scaled(BigRational(int_pow(2, static_cast<unsigned>(d))));
      if (k >= 2) rhs += SurdValue(BigRational(2 * d) * volume_rho_star(Params(d - 1, k - 1)));
      CHECK(boundary_volume_rho_star(p) == rhs);
    }
  }
}

TEST_CASE("telescoping and alternating identities") {
  XorShift64Star rng(43);
  for (int m = 0; m <= 30; ++m) {
    const BigRational k =
        make_rational(1 + static_cast<long>(rng.next() % 120), 1 + static_cast<long>(rng.next() % 7));
    BigRational sum = 0;
    for (int l = 0; l <= m; ++l)
      sum += rat_pow(k, l - 1) * (k - l) / BigRational(factorial(static_cast<unsigned>(l)));
    CHECK(sum == rat_pow(k, m) / BigRational(factorial(static_cast<unsigned>(m))));
  }
  for (int d = 1; d <= 30; ++d) {
    const BigRational k =
        make_rational(1 + static_cast<long>(rng.next() % (6L * d)), 1 + static_cast<long>(rng.next() % 6));
    BigRational sum = 0;
    for (int i = 0; i <= d; ++i) {
      const BigRational term = BigRational(binomial(d, i)) * rat_pow(k - i, d - 1);
      sum += i % 2 == 0 ? term : -term;
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("mahler volumes") {
  CHECK(mahler_volume(Params(3, 2)) == make_rational(40, 3));
  for (int d = 1; d <= 10; ++d) {
    const BigRational bound =
        make_rational(int_pow(4, static_cast<unsigned>(d)), factorial(static_cast<unsigned>(d)));
    CHECK(mahler_volume(Params(d, 1)) == bound);
    CHECK(mahler_volume(Params(d, d)) == bound);
  }
}

TEST_CASE("mahler sweep") {
  const MahlerReport report = mahler_sweep(12, 2);
  CHECK(report.violations == 0);
  CHECK(report.rows.size() == 78);
  for (const MahlerRow& row : report.rows) {
    CHECK(row.satisfied);
    CHECK(row.equality == (row.k == 1 || row.k == row.d));
    CHECK(row.mahler == mahler_volume(Params(row.d, row.k)));
    CHECK(row.bound == make_rational(int_pow(4, static_cast<unsigned>(row.d)),
                                     factorial(static_cast<unsigned>(row.d))));
  }
  // deterministic merge regardless of worker count
  const MahlerReport serial = mahler_sweep(12, 1);
  REQUIRE(serial.rows.size() == report.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].d == report.rows[i].d);
    CHECK(serial.rows[i].k == report.rows[i].k);
    CHECK(serial.rows[i].mahler == report.rows[i].mahler);
  }
  CHECK(report.min_k_per_d.size() == 12);
}

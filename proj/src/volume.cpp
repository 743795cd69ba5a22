#include "polyball/volume.hpp"

#include <bit>
#include <stdexcept>
#include <thread>

namespace polyball {

namespace {

constexpr int kVertexWalkMaxDim = 25;

void check_nonzero_direction(const VectorQ& a) {
  if (a.empty()) throw std::domain_error("direction vector is empty");
  if (a.size() > kVertexWalkMaxDim)
    throw std::length_error("cube vertex walk is limited to d <= 25");
  for (const BigRational& ai : a)
    if (ai == 0) throw std::domain_error("direction vector has a zero coordinate");
}

BigRational product(const VectorQ& a) {
  BigRational prod = 1;
  for (const BigRational& ai : a) prod *= ai;
  return prod;
}

}  // namespace

SurdValue apex_distance(const BigRational& k, int l, int i) {
  if (l < 1 || BigRational(l) > k) throw std::domain_error("apex_distance: requires 1 <= l <= k");
  if (i < 0 || i > l - 1) throw std::domain_error("apex_distance: requires 0 <= i <= l-1");
  const BigRational kk = k * k;
  const BigRational numer = kk - 2 * (i + 1) * k + BigRational((i + 1) * l);
  const BigRational denom = kk - 2 * i * k + BigRational(i * l);
  if (numer <= 0 || denom <= 0)
    throw std::domain_error("apex_distance: nonpositive radicand or denominator");
  return SurdValue::sqrt_of(numer / denom).scaled(k);
}

BigRational piece_volume(int d, const BigRational& k, int l) {
  if (d < 1) throw std::domain_error("piece_volume: requires d >= 1");
  if (l < 0 || BigRational(l) > k || floor_rat(k) < l)
    throw std::domain_error("piece_volume: requires 0 <= l <= floor(k)");
  if (BigRational(l) == k) return BigRational(0);
  return BigRational(int_pow(2, static_cast<unsigned>(d - l))) * rat_pow(k, l - 1) *
         (k - BigRational(l)) * BigRational(factorial(static_cast<unsigned>(d - l))) /
         BigRational(factorial(static_cast<unsigned>(d)));
}

BigRational volume_rho_unsummed(const Params& p) {
  const int d = p.d();
  BigRational pieces = 0;
  for (long l = 0; l <= p.floor_k(); ++l)
    pieces += rat_pow(p.k(), l - 1) * (p.k() - BigRational(l)) /
              BigRational(factorial(static_cast<unsigned>(l)));
  return BigRational(int_pow(2, static_cast<unsigned>(d))) * pieces / rat_pow(p.k(), d);
}

BigRational volume_rho(const Params& p) {
  const int d = p.d();
  const long m = p.floor_k();
  const BigRational closed = BigRational(int_pow(2, static_cast<unsigned>(d))) *
                             rat_pow(p.k(), m - d) /
                             BigRational(factorial(static_cast<unsigned>(m)));
  // The piece decomposition of the dilated body telescopes to the closed form.
  if (closed != volume_rho_unsummed(p))
    throw std::logic_error("volume_rho: telescoped form mismatch");
  return closed;
}

FacetVolumeRho facet_volume_rho(int d, long k) {
  if (k < 1 || k > d) throw std::domain_error("facet_volume_rho: requires integer 1 <= k <= d");
  // 2^(d-k) k^(k-1/2) (d-k)!/d!, rescaled by k^(d-1): coefficient of sqrt(k).
  const BigRational printed_coeff =
      BigRational(int_pow(2, static_cast<unsigned>(d - k))) *
      BigRational(factorial(static_cast<unsigned>(d - k))) /
      BigRational(factorial(static_cast<unsigned>(d))) * rat_pow(BigRational(k), k - d);
  FacetVolumeRho out;
  out.as_printed = SurdValue::term(printed_coeff, BigInt(k));
  out.corrected = out.as_printed.scaled(BigRational(d));
  return out;
}

BoundaryVolumeRho boundary_volume_rho(const Params& p) {
  if (!p.k_is_integer())
    throw std::domain_error("boundary_volume_rho: facet volumes are stated for integer k only");
  const int d = p.d();
  const long k = p.k_as_integer();
  const BigRational count(int_pow(2, static_cast<unsigned>(k)) * binomial(d, k));
  const FacetVolumeRho facet = facet_volume_rho(d, k);
  BoundaryVolumeRho out;
  out.as_printed = facet.as_printed.scaled(count);
  out.corrected = facet.corrected.scaled(count);
  const SurdValue closed = SurdValue::term(
      BigRational(d) * BigRational(int_pow(2, static_cast<unsigned>(d))) *
          rat_pow(BigRational(k), k - d) / BigRational(factorial(static_cast<unsigned>(k))),
      BigInt(k));
  if (!(out.corrected == closed))
    throw std::logic_error("boundary_volume_rho: facet total differs from closed form");
  return out;
}

BigRational halfspace_cube_volume(const VectorQ& a, const BigRational& c) {
  check_nonzero_direction(a);
  const int d = static_cast<int>(a.size());
  BigRational sum = 0;
  unsigned long long mask = 0;  // bit i set: v_i = 1
  BigRational dotv = 0;
  auto accumulate = [&] {
    if (dotv > c) return;
    const BigRational term = rat_pow(c - dotv, d);
    if (std::popcount(mask) % 2 == 0)
      sum += term;
    else
      sum -= term;
  };
  accumulate();
  for (unsigned long long t = 1; t < (1ull << d); ++t) {
    const int bit = std::countr_zero(t);
    mask ^= 1ull << bit;
    dotv += (mask >> bit) & 1ull ? a[static_cast<std::size_t>(bit)]
                                 : -a[static_cast<std::size_t>(bit)];
    accumulate();
  }
  return sum / (BigRational(factorial(static_cast<unsigned>(d))) * product(a));
}

BigRational orthant_volume_rho_star(const Params& p) {
  const int d = p.d();
  const long m = p.floor_k();
  BigRational sum = 0;
  for (long i = 0; i <= m; ++i) {
    const BigRational term = BigRational(binomial(d, i)) * rat_pow(p.k() - BigRational(i), d);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum / BigRational(factorial(static_cast<unsigned>(d)));
}

BigRational volume_rho_star(const Params& p) {
  return BigRational(int_pow(2, static_cast<unsigned>(p.d()))) * orthant_volume_rho_star(p);
}

SurdValue cube_section_volume(const VectorQ& a, const BigRational& c) {
  check_nonzero_direction(a);
  const int d = static_cast<int>(a.size());
  if (d < 2) throw std::domain_error("cube_section_volume: requires d >= 2");
  BigRational sum = 0;
  BigRational norm_sq = 0;
  for (const BigRational& ai : a) norm_sq += ai * ai;
  unsigned long long mask = 0;  // bit i set: v_i = -1
  BigRational dotv = 0;
  for (const BigRational& ai : a) dotv += ai;  // mask 0 is the all-ones vertex
  auto accumulate = [&] {
    const BigRational t = dotv + c;
    if (t == 0) return;  // sign(0) 0^(d-1) contributes nothing for d >= 2
    BigRational term = rat_pow(t, d - 1);
    if (t < 0) term = -term;                        // |t|^(d-1) sign(t)^d
    if (std::popcount(mask) % 2 != 0) term = -term;  // prod(v)
    sum += term;
  };
  accumulate();
  for (unsigned long long t = 1; t < (1ull << d); ++t) {
    const int bit = std::countr_zero(t);
    mask ^= 1ull << bit;
    dotv += (mask >> bit) & 1ull ? -2 * a[static_cast<std::size_t>(bit)]
                                 : 2 * a[static_cast<std::size_t>(bit)];
    accumulate();
  }
  const BigRational scale =
      sum / (2 * BigRational(factorial(static_cast<unsigned>(d - 1))) * product(a));
  return SurdValue::sqrt_of(norm_sq).scaled(scale);
}

SurdValue slice_volume_delta(int d, const BigRational& k) {
  if (d < 2) throw std::domain_error("slice_volume_delta: requires d >= 2");
  if (k < 0 || k > d) throw std::domain_error("slice_volume_delta: requires 0 <= k <= d");
  const long m = floor_rat(k).convert_to<long>();
  BigRational sum = 0;
  for (long i = 0; i <= m; ++i) {
    const BigRational term = BigRational(binomial(d, i)) * rat_pow(k - BigRational(i), d - 1);
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return SurdValue::term(sum / BigRational(factorial(static_cast<unsigned>(d - 1))), BigInt(d));
}

SurdValue boundary_volume_rho_star(const Params& p) {
  const int d = p.d();
  const long m = p.floor_k();
  BigRational cube_part = 0;  // facets inside cube facets, per unit of 2^d d
  for (long i = 0; i <= m - 1; ++i) {
    const BigRational term =
        rat_pow(p.k() - 1 - BigRational(i), d - 1) /
        BigRational(factorial(static_cast<unsigned>(i)) *
                    factorial(static_cast<unsigned>(d - i - 1)));
    if (i % 2 == 0)
      cube_part += term;
    else
      cube_part -= term;
  }
  BigRational slice_part = 0;
  for (long i = 0; i <= m; ++i) {
    const BigRational term =
        rat_pow(p.k() - BigRational(i), d - 1) /
        BigRational(factorial(static_cast<unsigned>(i)) *
                    factorial(static_cast<unsigned>(d - i)));
    if (i % 2 == 0)
      slice_part += term;
    else
      slice_part -= term;
  }
  const BigRational scale = BigRational(d) * BigRational(int_pow(2, static_cast<unsigned>(d)));
  SurdValue out(scale * cube_part);
  out += SurdValue::term(scale * slice_part, BigInt(d));
  return out;
}

BigRational mahler_volume(const Params& p) { return volume_rho(p) * volume_rho_star(p); }

namespace {

MahlerRow mahler_row(int d, long k, const BigInt& d_factorial, const BigInt& four_pow_d) {
  // S = sum_i (-1)^i C(d,i) (k-i)^d, so the orthant volume is S/d! and
  // mahler = 4^d k^(k-d) S / (k! d!); the bound test reduces to the integer
  // comparison S k^k >= k^d k!.
  BigInt s = 0;
  for (long i = 0; i <= k; ++i) {
    const BigInt term = binomial(d, i) * int_pow(BigInt(k - i), static_cast<unsigned>(d));
    if (i % 2 == 0)
      s += term;
    else
      s -= term;
  }
  const BigInt k_factorial = factorial(static_cast<unsigned>(k));
  MahlerRow row;
  row.d = d;
  row.k = k;
  row.mahler = BigRational(four_pow_d * s) /
               BigRational(k_factorial * d_factorial * int_pow(BigInt(k), static_cast<unsigned>(d))) *
               BigRational(int_pow(BigInt(k), static_cast<unsigned>(k)));
  row.bound = make_rational(four_pow_d, d_factorial);
  const BigInt lhs = s * int_pow(BigInt(k), static_cast<unsigned>(k));
  const BigInt rhs = k_factorial * int_pow(BigInt(k), static_cast<unsigned>(d));
  row.satisfied = lhs >= rhs;
  row.equality = lhs == rhs;
  return row;
}

std::vector<MahlerRow> mahler_rows_for_d(int d) {
  const BigInt d_factorial = factorial(static_cast<unsigned>(d));
  const BigInt four_pow_d = int_pow(BigInt(4), static_cast<unsigned>(d));
  std::vector<MahlerRow> rows;
  rows.reserve(static_cast<std::size_t>(d));
  for (long k = 1; k <= d; ++k) rows.push_back(mahler_row(d, k, d_factorial, four_pow_d));
  return rows;
}

}  // namespace

MahlerReport mahler_sweep(int d_max, int workers) {
  if (d_max < 1) throw std::domain_error("mahler_sweep: requires d_max >= 1");
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  workers = std::min(workers, d_max);

  std::vector<std::vector<MahlerRow>> per_d(static_cast<std::size_t>(d_max));
  if (workers <= 1) {
    for (int d = 1; d <= d_max; ++d) per_d[static_cast<std::size_t>(d - 1)] = mahler_rows_for_d(d);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int d = 1 + w; d <= d_max; d += workers)
          per_d[static_cast<std::size_t>(d - 1)] = mahler_rows_for_d(d);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  MahlerReport report;
  report.d_max = d_max;
  for (int d = 1; d <= d_max; ++d) {
    const auto& rows = per_d[static_cast<std::size_t>(d - 1)];
    long best_k = rows.front().k;
    const BigRational* best = &rows.front().mahler;
    for (const MahlerRow& row : rows) {
      if (!row.satisfied) ++report.violations;
      if (row.mahler < *best) {
        best = &row.mahler;
        best_k = row.k;
      }
    }
    report.min_k_per_d.emplace_back(d, best_k);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

}  // namespace polyball

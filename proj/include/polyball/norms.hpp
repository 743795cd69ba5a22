#pragma once

#include "polyball/params.hpp"
#include "polyball/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace polyball {

enum class Region { interior, boundary, exterior };

inline bool is_member(Region r) { return r != Region::exterior; }

inline const char* region_name(Region r) {
  switch (r) {
    case Region::interior: return "interior";
    case Region::boundary: return "boundary";
    default: return "exterior";
  }
}

namespace detail {

inline void check_dimension(std::size_t n, const Params& p) {
  if (static_cast<int>(n) != p.d())
    throw std::invalid_argument("vector dimension does not match d");
}

template <class Scalar>
std::vector<Scalar> abs_sorted_desc(const std::vector<Scalar>& x) {
  using std::abs;
  std::vector<Scalar> mag;
  mag.reserve(x.size());
  for (const Scalar& v : x) mag.push_back(abs(v));
  std::sort(mag.begin(), mag.end(), [](const Scalar& a, const Scalar& b) { return b < a; });
  return mag;
}

}  // namespace detail

// Norm whose unit ball is rho(d,k): the sum of the floor(k) largest absolute
// coordinates plus the fractional remainder of k times the next one.
template <class Scalar>
Scalar knorm(const std::vector<Scalar>& x, const Params& p) {
  detail::check_dimension(x.size(), p);
  const auto mag = detail::abs_sorted_desc(x);
  const long m = p.floor_k();
  Scalar total = Scalar(0);
  for (long i = 0; i < m; ++i) total += mag[static_cast<std::size_t>(i)];
  if (m < p.d()) {
    const Scalar frac = from_rational<Scalar>(p.k() - BigRational(m));
    total += frac * mag[static_cast<std::size_t>(m)];
  }
  return total;
}

// Same norm evaluated independently as min over t >= 0 of
//   g(t) = k t + sum_i max(|x_i| - t, 0).
// For a split x = u + v with t = ||v||_inf fixed, the optimal u clamps each
// v_i into [-t, t], so ||u||_1 = sum_i max(|x_i| - t, 0) and g(t) is the
// restriction of the defining infimum. g is convex piecewise linear with
// breakpoints at the |x_i|, hence scanning t in {0} + {|x_i|} is exact.
template <class Scalar>
Scalar knorm_variational(const std::vector<Scalar>& x, const Params& p) {
  detail::check_dimension(x.size(), p);
  const auto mag = detail::abs_sorted_desc(x);
  const Scalar k = from_rational<Scalar>(p.k());
  std::vector<Scalar> candidates = mag;
  candidates.push_back(Scalar(0));
  bool have = false;
  Scalar best = Scalar(0);
  for (const Scalar& t : candidates) {
    Scalar g = k * t;
    for (const Scalar& m : mag) {
      if (m > t) g += m - t;
    }
    if (!have || g < best) {
      best = g;
      have = true;
    }
  }
  return best;
}

// Gauge of rho*(d,k) = (k beta_d) ∩ gamma_d: max(||x||_inf, ||x||_1 / k).
template <class Scalar>
Scalar dual_norm(const std::vector<Scalar>& x, const Params& p) {
  using std::abs;
  detail::check_dimension(x.size(), p);
  Scalar linf = Scalar(0);
  Scalar l1 = Scalar(0);
  for (const Scalar& v : x) {
    const Scalar a = abs(v);
    l1 += a;
    if (linf < a) linf = a;
  }
  const Scalar scaled = l1 / from_rational<Scalar>(p.k());
  return linf < scaled ? scaled : linf;
}

inline int zero_norm(const VectorQ& x) {
  int count = 0;
  for (const BigRational& v : x)
    if (v != 0) ++count;
  return count;
}

// knorm(x, k) - knorm(x, l) for integer 1 <= k < l <= d; always <= 0, and
// zero exactly when x has at most k nonzero coordinates.
template <class Scalar>
Scalar sparsity_gap(const std::vector<Scalar>& x, long k, long l) {
  const int d = static_cast<int>(x.size());
  if (k >= l) throw std::domain_error("sparsity_gap: requires k < l");
  if (k < 1 || l > d) throw std::domain_error("sparsity_gap: requires 1 <= k < l <= d");
  return knorm(x, Params(d, k)) - knorm(x, Params(d, l));
}

namespace detail {

inline Region classify_exact(const BigRational& gauge) {
  if (gauge < 1) return Region::interior;
  if (gauge == 1) return Region::boundary;
  return Region::exterior;
}

inline Region classify_float(double gauge, double tol) {
  if (std::abs(gauge - 1.0) <= tol) return Region::boundary;
  return gauge < 1.0 ? Region::interior : Region::exterior;
}

}  // namespace detail

inline Region member_rho(const VectorQ& x, const Params& p) {
  return detail::classify_exact(knorm(x, p));
}

inline Region member_rho(const VectorD& x, const Params& p, double tol = 1e-12) {
  return detail::classify_float(knorm(x, p), tol);
}

inline Region member_rho_star(const VectorQ& x, const Params& p) {
  return detail::classify_exact(dual_norm(x, p));
}

inline Region member_rho_star(const VectorD& x, const Params& p, double tol = 1e-12) {
  return detail::classify_float(dual_norm(x, p), tol);
}

}  // namespace polyball

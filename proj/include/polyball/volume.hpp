#pragma once

#include "polyball/params.hpp"
#include "polyball/surd.hpp"
#include "polyball/vectors.hpp"

#include <utility>
#include <vector>

namespace polyball {

// Distance from a pulled apex to the affine span of the cube face and i of
// the other pulled points: k sqrt((k^2-2(i+1)k+(i+1)l) / (k^2-2ik+il)).
// Requires 1 <= l <= k, 0 <= i <= l-1, and positive radicand/denominator.
SurdValue apex_distance(const BigRational& k, int l, int i);

// Volume of the subdivision piece conv(gamma_{d-l} ∪ alpha_{l-1}) of
// k rho(d,k): 2^(d-l) k^(l-1) (k-l) (d-l)!/d!. Requires 0 <= l <= floor(k);
// l = k gives 0.
BigRational piece_volume(int d, const BigRational& k, int l);

// 2^d k^(floor(k)-d) / floor(k)!. Also evaluated through the piece
// decomposition 2^d/k^d sum_l k^(l-1)(k-l)/l! and cross-asserted.
BigRational volume_rho(const Params& p);

// The piece-decomposition form before the sum telescopes.
BigRational volume_rho_unsummed(const Params& p);

// (d-1)-volume of one facet of rho(d,k), integer k. The printed closed form
// 2^(d-k) k^(k-1/2) (d-k)!/d! (divided by k^(d-1) to undo the dilation) is
// short by a factor of d: it fails the forced cases k=1 (cube facet) and
// k=d (cross-polytope facet) and disagrees with exact facet triangulation by
// exactly that factor. Both values are reported.
struct FacetVolumeRho {
  SurdValue as_printed;
  SurdValue corrected;  // d * as_printed
};
FacetVolumeRho facet_volume_rho(int d, long k);

// facet_count * facet volume; corrected total d 2^d k^(k-d+1/2) / k!.
struct BoundaryVolumeRho {
  SurdValue as_printed;
  SurdValue corrected;
};
BoundaryVolumeRho boundary_volume_rho(const Params& p);  // integer k

// Exact volume of [0,1]^d ∩ {a.x <= c}: sum over the cube vertices v in the
// half-space of (-1)^(sum v) (c - a.v)^d / (d! prod(a)). Every a_i must be
// nonzero; d <= 25 (the sum walks all 2^d vertices in Gray-code order).
BigRational halfspace_cube_volume(const VectorQ& a, const BigRational& c);

// Volume of rho*(d,k) ∩ [0,1]^d: sum_{i=0}^{floor(k)} (-1)^i (k-i)^d / (i!(d-i)!).
BigRational orthant_volume_rho_star(const Params& p);

// 2^d times the orthant volume.
BigRational volume_rho_star(const Params& p);

// Exact (d-1)-volume of [-1,1]^d ∩ {a.x = c}:
// ||a||_2 sum_v (a.v+c)^(d-1) sign(a.v+c) prod(v) / (2 (d-1)! prod(a)) over
// all cube vertices v, with zero terms for a.v+c = 0. Every a_i nonzero;
// 2 <= d <= 25 (the sign convention at d=1 is not defined here).
SurdValue cube_section_volume(const VectorQ& a, const BigRational& c);

// (d-1)-volume of delta_{d-1,k} = [0,1]^d ∩ {sum x_i = k} as
// (rational) * sqrt(d): sqrt(d)/(d-1)! sum_{i<=floor(k)} (-1)^i C(d,i)(k-i)^(d-1).
// Requires d >= 2 and 0 <= k <= d; the endpoints give exact zero.
SurdValue slice_volume_delta(int d, const BigRational& k);

// Boundary of rho*(d,k): 2d facets congruent to rho*(d-1,k-1) inside the
// cube facets plus 2^d slices delta_{d-1,k}; comes out as
// 2^d d [sum_i (-1)^i (k-1-i)^(d-1)/(i!(d-i-1)!) + sqrt(d) sum_i (-1)^i (k-i)^(d-1)/(i!(d-i)!)].
SurdValue boundary_volume_rho_star(const Params& p);

// volume_rho * volume_rho_star.
BigRational mahler_volume(const Params& p);

struct MahlerRow {
  int d = 0;
  long k = 0;
  BigRational mahler;
  BigRational bound;  // 4^d / d!
  bool satisfied = false;
  bool equality = false;
};

struct MahlerReport {
  int d_max = 0;
  std::vector<MahlerRow> rows;  // d ascending, then k ascending
  long violations = 0;
  std::vector<std::pair<int, long>> min_k_per_d;  // smallest minimizing k
};

// Exact rational comparison of mahler_volume(d,k) against 4^d/d! for all
// integer 1 <= k <= d <= d_max; workers = 0 picks a thread count, results
// are merged in d order either way.
MahlerReport mahler_sweep(int d_max, int workers = 0);

}  // namespace polyball

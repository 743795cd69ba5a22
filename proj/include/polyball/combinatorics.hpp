#pragma once

#include "polyball/params.hpp"
#include "polyball/vectors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyball {

enum class Family { primal, dual };

// Face counts f_0 .. f_{dim-1} of a dim-polytope.
struct FVector {
  std::vector<BigInt> counts;

  int dim() const { return static_cast<int>(counts.size()); }
  bool euler_ok() const;  // alternating sum equals 1 - (-1)^dim
  FVector reversed() const;
  BigInt total_proper() const;  // sum of all entries
  std::string to_string() const;

  bool operator==(const FVector&) const = default;
};

struct Inequality {
  VectorQ normal;
  BigRational rhs;  // normal . x <= rhs
};

// Vertex list plus facet inequalities of the same polytope. For the
// generators below, facet i is tight exactly at facet_vertex_sets(p)[i].
struct PolytopeRep {
  int dim = 0;
  std::vector<VectorQ> vertices;
  std::vector<Inequality> facets;
};

BigInt cube_face_count(int d, int i);   // 2^(d-i) C(d,i)
BigInt cross_face_count(int d, int i);  // 2^(i+1) C(d,i+1)

// Vertices: 2^d + 2d for 1 < k < d, 2^d for k = 1, 2d for k = d (primal);
// 2^k C(d,k) for the dual (integer k only).
BigInt vertex_count(const Params& p, Family family);

// Facets of rho(d,k): 2^k C(d,k) for integer k,
// 2^(floor(k)+1) C(d, floor(k)+1) (floor(k)+1) otherwise.
// The facet count of rho*(d,k) is vertex_count(p, primal) by polarity.
BigInt facet_count(const Params& p);

// Count of i-faces of rho(d,k) that come from neither the scaled cube nor
// the cross-polytope; integer 1 < k < d, 1 <= i <= d-2. Each summand divides
// exactly; a fractional intermediate is reported as a logic error.
BigInt f_star(int d, long k, int i);

// Full f-vector for integer k; the dual family is the exact reversal.
FVector f_vector(const Params& p, Family family = Family::primal);

// (1 + sum of f-vector, total >= 3^d); the polytope itself is counted,
// the empty face is not. Integer k.
std::pair<BigInt, bool> total_faces_and_kalai(const Params& p);

// One sorted vertex-index set per facet of rho(d,k), indices into
// rep_rho(p).vertices, in the same order as rep_rho(p).facets.
std::vector<std::vector<int>> facet_vertex_sets(const Params& p);

// V-rep and facet inequalities of rho(d,k) = conv(beta_d ∪ gamma_d / k),
// for any rational k in [1,d]. Integer k uses the k-subset sign-sum
// inequalities; non-integer k uses the split family in which one chosen
// coordinate of each (floor(k)+1)-subset carries weight k - floor(k).
PolytopeRep rep_rho(const Params& p);

// The k-subset sign-sum inequality description; integer k only.
PolytopeRep hrep_rho(const Params& p);

// rho*(d,k) = (k beta_d) ∩ gamma_d for integer k: vertices are the points of
// {0,1,-1}^d with exactly k nonzero coordinates; facet i is polar to vertex i
// of rep_rho(p).
PolytopeRep rep_rho_star(const Params& p);

}  // namespace polyball

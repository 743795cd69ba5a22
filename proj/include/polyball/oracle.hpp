#pragma once

#include "polyball/face_lattice.hpp"
#include "polyball/params.hpp"
#include "polyball/surd.hpp"
#include "polyball/vectors.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace polyball {

// xorshift64*: the full generator state is one nonzero 64-bit word and a
// step is
//     s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;  output = s * 2685821657736338717
// with uniform doubles taken as (output >> 11) * 2^-53. Written out so any
// port reproduces identical streams; a zero seed is replaced by a fixed
// nonzero constant.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed)
      : state_(seed == 0 ? 0x9E3779B97F4A7C15ull : seed) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ull;
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

using MembershipFn = std::function<bool(const VectorD&)>;

struct MonteCarloEstimate {
  double volume = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  long long hits = 0;
};

// Uniform samples over [-w, w]^d; estimate = hit fraction * (2w)^d, std_error
// the binomial standard error scaled the same way. Deterministic for a fixed
// (seed, workers) pair: worker w uses seed + w and partial counts merge in
// worker order. Requires samples >= 10^4.
MonteCarloEstimate monte_carlo_volume(const MembershipFn& member, int d,
                                      const BigRational& box_halfwidth, long long samples,
                                      std::uint64_t seed, int workers = 1);

// m-volume of the simplex spanned by m+1 rational points via the Gram
// determinant sqrt(det(G^T G)) / m!, computed as an exact integer determinant
// after clearing denominators. Affinely dependent input gives zero.
SurdValue simplex_measure(const std::vector<VectorQ>& points);

enum class FanApex { first_vertex, last_vertex };

// Fan triangulation of a face into dim-simplices, recursing over the faces
// of the lattice below it; each level cones its apex over the child faces
// that avoid the apex.
std::vector<std::vector<int>> triangulate_face(const FaceLattice& lattice, const FaceRecord& face,
                                               FanApex apex = FanApex::first_vertex);

SurdValue face_measure(const PolytopeRep& rep, const FaceLattice& lattice, const FaceRecord& face,
                       FanApex apex = FanApex::first_vertex);

// Lattice face of inequality `facet_index` (dimension top-1, tight set of
// exactly that column).
const FaceRecord& facet_record(const FaceLattice& lattice, int facet_index);

SurdValue facet_triangulation_measure(const PolytopeRep& rep, const FaceLattice& lattice,
                                      int facet_index, FanApex apex = FanApex::first_vertex);

// Sum of the exact triangulated measures of all facets.
SurdValue boundary_triangulation_measure(const PolytopeRep& rep,
                                         FanApex apex = FanApex::first_vertex);

// Exact d-volume by triangulating the whole polytope from a vertex.
BigRational triangulation_volume(const PolytopeRep& rep, FanApex apex = FanApex::first_vertex);

// Gauge inf{t > 0 : x/t in body} within tol, by exponential bracketing and
// bisection; the body must contain the origin in its interior. x must be
// nonzero.
double gauge_bisection(const MembershipFn& member, const VectorD& x, double tol = 1e-9);

// Brute-force vertex enumeration by solving every d-subset of tight
// inequalities; exact, intended for small instances (the number of subsets
// is capped).
std::vector<VectorQ> vertices_from_inequalities(int d, const std::vector<Inequality>& facets);

// rho*(d,k) for any k in [1,d] with vertices enumerated from the defining
// inequalities; small d only.
PolytopeRep rep_rho_star_enumerated(const Params& p);

// Exact (d-1)-measure of [-1,1]^d ∩ {a.x = c} by solving the section's
// vertices on the cube edges and triangulating through its face lattice.
SurdValue cube_section_measure_oracle(const VectorQ& a, const BigRational& c);

}  // namespace polyball

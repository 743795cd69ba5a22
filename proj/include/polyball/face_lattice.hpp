#pragma once

#include "polyball/combinatorics.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polyball {

using VertexBits = boost::dynamic_bitset<>;

// Vertex-facet incidence: column f holds the vertices at which inequality f
// is tight (exact rational comparison).
struct IncidenceMatrix {
  int num_vertices = 0;
  int num_facets = 0;
  std::vector<VertexBits> facet_columns;

  int row_degree(int vertex) const;
};

// Exact affine dimension of a point set (-1 for the empty set).
int affine_dim(const std::vector<VectorQ>& points);
int affine_dim_of(const std::vector<VectorQ>& points, const std::vector<int>& indices);

// Exact solution of a square system; std::nullopt when singular.
std::optional<VectorQ> solve_linear(std::vector<VectorQ> a, VectorQ b);

// Throws std::invalid_argument if some vertex violates an inequality; checks
// that every vertex lies on at least dim facets and (in strict mode) that
// every facet column holds at least dim vertices.
IncidenceMatrix build_incidence(const PolytopeRep& rep, bool strict = true);

// A face as the Galois-closed pair (vertex set, set of facets containing it).
struct FaceRecord {
  std::vector<int> vertex_set;  // sorted
  std::vector<int> facet_set;   // sorted
  int dim = -1;
};

struct FaceLattice {
  std::vector<FaceRecord> faces;  // proper nonempty faces, ascending dim
  FaceRecord improper;            // the whole polytope
  FVector f;
};

// Breadth-first closure of the facet columns under intersection; face
// dimensions by exact rank of the vertex differences. Strict mode asserts
// the column/vertex/Euler bookkeeping of a genuine V/H pair; relaxed mode
// tolerates duplicate or empty columns (used for hyperplane sections).
// Refuses with a size estimate when rep.dim exceeds dim_guard.
FaceLattice enumerate_faces(const IncidenceMatrix& inc, const PolytopeRep& rep,
                            int dim_guard = 6, bool strict = true);

FaceLattice enumerate_faces(const PolytopeRep& rep, int dim_guard = 6, bool strict = true);

// {"dim":..., "f_vector":[...], "faces":[{"dim":..., "vertices":[...]},...]}
std::string face_lattice_json(const FaceLattice& lattice);

}  // namespace polyball

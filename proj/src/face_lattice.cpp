#include "polyball/face_lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace polyball {

int IncidenceMatrix::row_degree(int vertex) const {
  int degree = 0;
  for (const VertexBits& col : facet_columns)
    if (col.test(static_cast<std::size_t>(vertex))) ++degree;
  return degree;
}

namespace {

// Incremental exact row reduction; rows are normalized on their pivot.
class RankTracker {
 public:
  explicit RankTracker(std::size_t width) : width_(width) {}

  bool add(VectorQ row) {
    for (const auto& [pivot, basis_row] : basis_) {
      if (row[pivot] != 0) {
        const BigRational factor = row[pivot];
        for (std::size_t j = pivot; j < width_; ++j) row[j] -= factor * basis_row[j];
      }
    }
    std::size_t pivot = width_;
    for (std::size_t j = 0; j < width_; ++j) {
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == width_) return false;
    const BigRational inv = row[pivot];
    for (std::size_t j = pivot; j < width_; ++j) row[j] /= inv;
    basis_.emplace_back(pivot, std::move(row));
    std::sort(basis_.begin(), basis_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, VectorQ>> basis_;
};

VectorQ difference(const VectorQ& a, const VectorQ& b) {
  VectorQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

int affine_dim(const std::vector<VectorQ>& points) {
  if (points.empty()) return -1;
  RankTracker tracker(points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i) tracker.add(difference(points[i], points[0]));
  return tracker.rank();
}

int affine_dim_of(const std::vector<VectorQ>& points, const std::vector<int>& indices) {
  if (indices.empty()) return -1;
  const VectorQ& origin = points[static_cast<std::size_t>(indices[0])];
  RankTracker tracker(origin.size());
  for (std::size_t i = 1; i < indices.size(); ++i)
    tracker.add(difference(points[static_cast<std::size_t>(indices[i])], origin));
  return tracker.rank();
}

std::optional<VectorQ> solve_linear(std::vector<VectorQ> a, VectorQ b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const BigRational inv = a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] /= inv;
    b[col] /= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const BigRational factor = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

IncidenceMatrix build_incidence(const PolytopeRep& rep, bool strict) {
  IncidenceMatrix inc;
  inc.num_vertices = static_cast<int>(rep.vertices.size());
  inc.num_facets = static_cast<int>(rep.facets.size());
  inc.facet_columns.assign(rep.facets.size(),
                           VertexBits(rep.vertices.size()));
  for (std::size_t f = 0; f < rep.facets.size(); ++f) {
    const Inequality& ineq = rep.facets[f];
    for (std::size_t v = 0; v < rep.vertices.size(); ++v) {
      const BigRational value = dot(ineq.normal, rep.vertices[v]);
      if (value > ineq.rhs)
        throw std::invalid_argument("build_incidence: vertex violates an inequality");
      if (value == ineq.rhs) inc.facet_columns[f].set(v);
    }
  }
  if (strict) {
    for (int v = 0; v < inc.num_vertices; ++v) {
      if (inc.row_degree(v) < rep.dim)
        throw std::invalid_argument("build_incidence: vertex lies on fewer than dim facets");
    }
    for (const VertexBits& col : inc.facet_columns) {
      if (static_cast<int>(col.count()) < rep.dim)
        throw std::invalid_argument("build_incidence: facet holds fewer than dim vertices");
    }
  }
  return inc;
}

FaceLattice enumerate_faces(const IncidenceMatrix& inc, const PolytopeRep& rep,
                            int dim_guard, bool strict) {
  if (rep.dim > dim_guard) {
    const double intersections =
        static_cast<double>(inc.num_facets) * static_cast<double>(inc.num_facets + 1) *
        static_cast<double>(inc.num_vertices);
    throw std::length_error(
        "enumerate_faces: dimension " + std::to_string(rep.dim) + " exceeds the guard " +
        std::to_string(dim_guard) + " (would touch on the order of " +
        std::to_string(static_cast<long long>(intersections)) + " set operations per level)");
  }

  const std::size_t n = rep.vertices.size();
  std::vector<VertexBits> columns;
  columns.reserve(inc.facet_columns.size());
  for (const VertexBits& col : inc.facet_columns) {
    if (col.none() || col.all()) {
      if (strict)
        throw std::invalid_argument("enumerate_faces: degenerate facet column in strict mode");
      continue;
    }
    columns.push_back(col);
  }

  std::set<VertexBits> seen;
  std::deque<VertexBits> queue;
  for (const VertexBits& col : columns) {
    if (seen.insert(col).second) queue.push_back(col);
  }
  while (!queue.empty()) {
    const VertexBits current = queue.front();
    queue.pop_front();
    for (const VertexBits& col : columns) {
      VertexBits meet = current & col;
      if (meet.none()) continue;
      if (seen.insert(meet).second) queue.push_back(meet);
    }
  }

  FaceLattice lattice;
  const int top_dim = affine_dim(rep.vertices);
  for (const VertexBits& bits : seen) {
    FaceRecord face;
    for (std::size_t v = bits.find_first(); v != VertexBits::npos; v = bits.find_next(v))
      face.vertex_set.push_back(static_cast<int>(v));
    for (std::size_t f = 0; f < inc.facet_columns.size(); ++f) {
      if (bits.is_subset_of(inc.facet_columns[f])) face.facet_set.push_back(static_cast<int>(f));
    }
    // Galois closure: the meet of the columns in facet_set must give back the
    // vertex set (automatic for meets of columns; asserted all the same).
    VertexBits closure(n);
    closure.set();
    for (int f : face.facet_set) closure &= inc.facet_columns[static_cast<std::size_t>(f)];
    if (closure != bits) throw std::logic_error("enumerate_faces: face is not Galois-closed");
    face.dim = affine_dim_of(rep.vertices, face.vertex_set);
    lattice.faces.push_back(std::move(face));
  }
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const FaceRecord& a, const FaceRecord& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_set < b.vertex_set;
  });

  lattice.improper.vertex_set.resize(n);
  for (std::size_t v = 0; v < n; ++v) lattice.improper.vertex_set[v] = static_cast<int>(v);
  lattice.improper.dim = top_dim;

  lattice.f.counts.assign(static_cast<std::size_t>(top_dim), BigInt(0));
  for (const FaceRecord& face : lattice.faces) {
    if (face.dim >= top_dim) throw std::logic_error("enumerate_faces: proper face of full dimension");
    lattice.f.counts[static_cast<std::size_t>(face.dim)] += 1;
  }

  if (strict) {
    if (lattice.f.counts.empty() || lattice.f.counts[0] != BigInt(static_cast<long>(n)))
      throw std::logic_error("enumerate_faces: 0-face count differs from vertex count");
    if (lattice.f.counts.back() != BigInt(static_cast<long>(columns.size())))
      throw std::logic_error("enumerate_faces: top face count differs from facet count");
    if (!lattice.f.euler_ok()) throw std::logic_error("enumerate_faces: Euler relation violated");
  }
  return lattice;
}

FaceLattice enumerate_faces(const PolytopeRep& rep, int dim_guard, bool strict) {
  return enumerate_faces(build_incidence(rep, strict), rep, dim_guard, strict);
}

std::string face_lattice_json(const FaceLattice& lattice) {
  nlohmann::json doc;
  doc["dim"] = lattice.improper.dim;
  doc["f_vector"] = nlohmann::json::array();
  for (const BigInt& f : lattice.f.counts) doc["f_vector"].push_back(f.str());
  doc["faces"] = nlohmann::json::array();
  for (const FaceRecord& face : lattice.faces) {
    nlohmann::json entry;
    entry["dim"] = face.dim;
    entry["vertices"] = face.vertex_set;
    doc["faces"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

}  // namespace polyball

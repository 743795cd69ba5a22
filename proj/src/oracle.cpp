#include "polyball/oracle.hpp"

#include "polyball/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace polyball {

MonteCarloEstimate monte_carlo_volume(const MembershipFn& member, int d,
                                      const BigRational& box_halfwidth, long long samples,
                                      std::uint64_t seed, int workers) {
  if (d < 1) throw std::domain_error("monte_carlo_volume: requires d >= 1");
  if (box_halfwidth <= 0) throw std::domain_error("monte_carlo_volume: requires positive halfwidth");
  if (samples < 10000) throw std::domain_error("monte_carlo_volume: requires samples >= 10^4");
  if (workers < 1) workers = 1;
  if (static_cast<long long>(workers) > samples) workers = static_cast<int>(samples);

  const double w = to_double(box_halfwidth);
  std::vector<long long> hits(static_cast<std::size_t>(workers), 0);
  std::vector<long long> share(static_cast<std::size_t>(workers), samples / workers);
  for (long long r = 0; r < samples % workers; ++r) ++share[static_cast<std::size_t>(r)];

  auto run_worker = [&](int index) {
    XorShift64Star rng(seed + static_cast<std::uint64_t>(index));
    VectorD point(static_cast<std::size_t>(d));
    long long local = 0;
    for (long long s = 0; s < share[static_cast<std::size_t>(index)]; ++s) {
      for (int i = 0; i < d; ++i)
        point[static_cast<std::size_t>(i)] = w * (2.0 * rng.next_unit() - 1.0);
      if (member(point)) ++local;
    }
    hits[static_cast<std::size_t>(index)] = local;
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(run_worker, i);
    for (std::thread& t : pool) t.join();
  }

  long long total_hits = 0;
  for (long long h : hits) total_hits += h;  // worker-index order

  const double box_volume = std::pow(2.0 * w, d);
  const double p = static_cast<double>(total_hits) / static_cast<double>(samples);
  MonteCarloEstimate out;
  out.samples = samples;
  out.hits = total_hits;
  out.volume = p * box_volume;
  out.std_error = box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return out;
}

namespace {

// Fraction-free Gaussian elimination; exact determinant of a square integer
// matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return BigInt(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

SurdValue simplex_measure(const std::vector<VectorQ>& points) {
  if (points.empty()) throw std::domain_error("simplex_measure: no points");
  const std::size_t m = points.size() - 1;
  if (m == 0) return SurdValue(BigRational(1));
  const std::size_t d = points[0].size();
  if (m > d) return SurdValue();  // affinely dependent

  // Edge vectors against a common denominator so the Gram matrix is integral.
  BigInt common = 1;
  for (const VectorQ& pt : points)
    for (const BigRational& c : pt) common = boost::multiprecision::lcm(common, denominator(c));
  std::vector<std::vector<BigInt>> edges(m, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const BigRational scaled = (points[i + 1][j] - points[0][j]) * BigRational(common);
      edges[i][j] = numerator(scaled);  // exact: denominator divides common
    }

  std::vector<std::vector<BigInt>> gram(m, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      BigInt s = 0;
      for (std::size_t c = 0; c < d; ++c) s += edges[i][c] * edges[j][c];
      gram[i][j] = s;
      gram[j][i] = s;
    }

  const BigInt det = bareiss_determinant(std::move(gram));
  if (det == 0) return SurdValue();
  if (det < 0) throw std::logic_error("simplex_measure: negative Gram determinant");
  const BigInt denom = int_pow(common, static_cast<unsigned>(m)) *
                       factorial(static_cast<unsigned>(m));
  return SurdValue::term(make_rational(1, denom), det);
}

namespace {

VertexBits bits_of(const std::vector<int>& indices, std::size_t n) {
  VertexBits bits(n);
  for (int v : indices) bits.set(static_cast<std::size_t>(v));
  return bits;
}

struct FanContext {
  const FaceLattice& lattice;
  std::size_t num_vertices;
  FanApex apex;
  std::vector<VertexBits> face_bits;                      // per lattice face
  std::map<const FaceRecord*, std::vector<std::vector<int>>> memo;

  explicit FanContext(const FaceLattice& lat, std::size_t n, FanApex a)
      : lattice(lat), num_vertices(n), apex(a) {
    face_bits.reserve(lattice.faces.size());
    for (const FaceRecord& face : lattice.faces)
      face_bits.push_back(bits_of(face.vertex_set, n));
  }

  const std::vector<std::vector<int>>& simplices(const FaceRecord& face) {
    auto it = memo.find(&face);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (face.vertex_set.size() == static_cast<std::size_t>(face.dim) + 1) {
      out.push_back(face.vertex_set);
    } else {
      const int apex_vertex =
          apex == FanApex::first_vertex ? face.vertex_set.front() : face.vertex_set.back();
      const VertexBits parent = bits_of(face.vertex_set, num_vertices);
      for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
        const FaceRecord& child = lattice.faces[i];
        if (child.dim != face.dim - 1) continue;
        if (!face_bits[i].is_subset_of(parent)) continue;
        if (face_bits[i].test(static_cast<std::size_t>(apex_vertex))) continue;
        for (const std::vector<int>& base : simplices(child)) {
          std::vector<int> cone = base;
          cone.push_back(apex_vertex);
          out.push_back(std::move(cone));
        }
      }
      if (out.empty()) throw std::logic_error("triangulate_face: no children below face");
    }
    return memo.emplace(&face, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<std::vector<int>> triangulate_face(const FaceLattice& lattice, const FaceRecord& face,
                                               FanApex apex) {
  const std::size_t n = lattice.improper.vertex_set.size();
  FanContext ctx(lattice, n, apex);
  return ctx.simplices(face);
}

SurdValue face_measure(const PolytopeRep& rep, const FaceLattice& lattice, const FaceRecord& face,
                       FanApex apex) {
  SurdValue total;
  for (const std::vector<int>& simplex : triangulate_face(lattice, face, apex)) {
    std::vector<VectorQ> pts;
    pts.reserve(simplex.size());
    for (int v : simplex) pts.push_back(rep.vertices[static_cast<std::size_t>(v)]);
    total += simplex_measure(pts);
  }
  return total;
}

const FaceRecord& facet_record(const FaceLattice& lattice, int facet_index) {
  const int top = lattice.improper.dim;
  for (const FaceRecord& face : lattice.faces) {
    if (face.dim != top - 1) continue;
    if (face.facet_set.size() == 1 && face.facet_set.front() == facet_index) return face;
  }
  throw std::invalid_argument("facet_record: no lattice face for that inequality");
}

SurdValue facet_triangulation_measure(const PolytopeRep& rep, const FaceLattice& lattice,
                                      int facet_index, FanApex apex) {
  return face_measure(rep, lattice, facet_record(lattice, facet_index), apex);
}

SurdValue boundary_triangulation_measure(const PolytopeRep& rep, FanApex apex) {
  const FaceLattice lattice = enumerate_faces(rep);
  SurdValue total;
  for (const FaceRecord& face : lattice.faces) {
    if (face.dim == lattice.improper.dim - 1) total += face_measure(rep, lattice, face, apex);
  }
  return total;
}

BigRational triangulation_volume(const PolytopeRep& rep, FanApex apex) {
  const FaceLattice lattice = enumerate_faces(rep);
  const SurdValue total = face_measure(rep, lattice, lattice.improper, apex);
  if (!total.is_rational())
    throw std::logic_error("triangulation_volume: full-dimensional volume must be rational");
  return total.rational_part();
}

double gauge_bisection(const MembershipFn& member, const VectorD& x, double tol) {
  bool nonzero = false;
  for (double c : x)
    if (c != 0.0) nonzero = true;
  if (!nonzero) throw std::domain_error("gauge_bisection: x must be nonzero");
  if (tol <= 0) throw std::domain_error("gauge_bisection: tol must be positive");

  VectorD scaled(x.size());
  auto member_at = [&](double t) {
    for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = x[i] / t;
    return member(scaled);
  };

  double hi = 1.0;
  int guard = 0;
  while (!member_at(hi)) {
    hi *= 2.0;
    if (++guard > 200) throw std::runtime_error("gauge_bisection: no upper bracket");
  }
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (member_at(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<VectorQ> vertices_from_inequalities(int d, const std::vector<Inequality>& facets) {
  const std::size_t n = facets.size();
  if (d < 1 || n < static_cast<std::size_t>(d))
    throw std::domain_error("vertices_from_inequalities: too few inequalities");
  {
    // Cap the subset count; this enumerator is for small oracle instances.
    double subsets = 1.0;
    for (int i = 0; i < d; ++i) subsets *= static_cast<double>(n - static_cast<std::size_t>(i)) /
                                           static_cast<double>(i + 1);
    if (subsets > 2e6)
      throw std::length_error("vertices_from_inequalities: too many subsets to enumerate");
  }

  std::set<VectorQ> found;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  while (true) {
    std::vector<VectorQ> a;
    VectorQ b;
    a.reserve(pick.size());
    for (std::size_t idx : pick) {
      a.push_back(facets[idx].normal);
      b.push_back(facets[idx].rhs);
    }
    if (auto solution = solve_linear(std::move(a), std::move(b))) {
      bool inside = true;
      for (const Inequality& ineq : facets) {
        if (dot(ineq.normal, *solution) > ineq.rhs) {
          inside = false;
          break;
        }
      }
      if (inside) found.insert(std::move(*solution));
    }
    // next combination
    int pos = d - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - static_cast<std::size_t>(d - pos))
      --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < d; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return {found.begin(), found.end()};
}

PolytopeRep rep_rho_star_enumerated(const Params& p) {
  const int d = p.d();
  PolytopeRep rep;
  rep.dim = d;
  const bool has_axis = p.k() > 1;
  const bool has_cross = p.k() < d || d == 1;
  if (has_axis) {
    for (int i = 0; i < d; ++i) {
      for (int sign = 0; sign < 2; ++sign) {
        Inequality ineq{VectorQ(static_cast<std::size_t>(d), BigRational(0)), BigRational(1)};
        ineq.normal[static_cast<std::size_t>(i)] = sign == 0 ? 1 : -1;
        rep.facets.push_back(std::move(ineq));
      }
    }
  }
  if (has_cross) {
    if (d > 16) throw std::length_error("rep_rho_star_enumerated: limited to d <= 16");
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      Inequality ineq{VectorQ(static_cast<std::size_t>(d), BigRational(0)), p.k()};
      for (int i = 0; i < d; ++i)
        ineq.normal[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
      rep.facets.push_back(std::move(ineq));
    }
  }
  rep.vertices = vertices_from_inequalities(d, rep.facets);
  return rep;
}

SurdValue cube_section_measure_oracle(const VectorQ& a, const BigRational& c) {
  const int d = static_cast<int>(a.size());
  if (d < 2) throw std::domain_error("cube_section_measure_oracle: requires d >= 2");
  for (const BigRational& ai : a)
    if (ai == 0) throw std::domain_error("cube_section_measure_oracle: zero coordinate");
  if (d > 16) throw std::length_error("cube_section_measure_oracle: limited to d <= 16");

  // Section vertices sit on cube edges: fix all but one coordinate at +-1 and
  // solve a.x = c for the free one.
  std::set<VectorQ> points;
  for (int free = 0; free < d; ++free) {
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
      VectorQ x(static_cast<std::size_t>(d), BigRational(0));
      BigRational fixed_dot = 0;
      int bit = 0;
      for (int i = 0; i < d; ++i) {
        if (i == free) continue;
        const BigRational value((mask >> bit) & 1u ? -1 : 1);
        x[static_cast<std::size_t>(i)] = value;
        fixed_dot += a[static_cast<std::size_t>(i)] * value;
        ++bit;
      }
      const BigRational coord = (c - fixed_dot) / a[static_cast<std::size_t>(free)];
      if (coord < -1 || coord > 1) continue;
      x[static_cast<std::size_t>(free)] = coord;
      points.insert(std::move(x));
    }
  }

  std::vector<VectorQ> vertices(points.begin(), points.end());
  if (static_cast<int>(vertices.size()) < d || affine_dim(vertices) < d - 1) return SurdValue();

  PolytopeRep rep;
  rep.dim = d - 1;  // the section's own dimension
  rep.vertices = std::move(vertices);
  for (int i = 0; i < d; ++i) {
    for (int sign = 0; sign < 2; ++sign) {
      Inequality ineq{VectorQ(static_cast<std::size_t>(d), BigRational(0)), BigRational(1)};
      ineq.normal[static_cast<std::size_t>(i)] = sign == 0 ? 1 : -1;
      rep.facets.push_back(std::move(ineq));
    }
  }
  const FaceLattice lattice =
      enumerate_faces(build_incidence(rep, /*strict=*/false), rep, /*dim_guard=*/8,
                      /*strict=*/false);
  return face_measure(rep, lattice, lattice.improper);
}

}  // namespace polyball

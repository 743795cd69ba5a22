#include "polyball/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyball {

bool FVector::euler_ok() const {
  BigInt alt = 0;
  int sign = 1;
  for (const BigInt& f : counts) {
    alt += sign * f;
    sign = -sign;
  }
  return alt == (dim() % 2 == 0 ? BigInt(0) : BigInt(2));
}

FVector FVector::reversed() const {
  FVector out = *this;
  std::reverse(out.counts.begin(), out.counts.end());
  return out;
}

BigInt FVector::total_proper() const {
  BigInt total = 0;
  for (const BigInt& f : counts) total += f;
  return total;
}

std::string FVector::to_string() const {
  std::string out;
  for (const BigInt& f : counts) {
    if (!out.empty()) out += " ";
    out += f.str();
  }
  return out;
}

BigInt cube_face_count(int d, int i) { return int_pow(2, static_cast<unsigned>(d - i)) * binomial(d, i); }

BigInt cross_face_count(int d, int i) { return int_pow(2, static_cast<unsigned>(i + 1)) * binomial(d, i + 1); }

BigInt vertex_count(const Params& p, Family family) {
  const int d = p.d();
  if (family == Family::dual) {
    if (!p.k_is_integer())
      throw std::domain_error("vertex_count: no closed form for the dual with non-integer k");
    const long k = p.k_as_integer();
    return int_pow(2, static_cast<unsigned>(k)) * binomial(d, k);
  }
  if (p.k() == 1) return int_pow(2, static_cast<unsigned>(d));
  if (p.k() == d) return BigInt(2 * d);
  return int_pow(2, static_cast<unsigned>(d)) + 2 * d;
}

BigInt facet_count(const Params& p) {
  const int d = p.d();
  if (p.k_is_integer()) {
    const long k = p.k_as_integer();
    return int_pow(2, static_cast<unsigned>(k)) * binomial(d, k);
  }
  const long m = p.floor_k();
  return int_pow(2, static_cast<unsigned>(m + 1)) * binomial(d, m + 1) * (m + 1);
}

BigInt f_star(int d, long k, int i) {
  if (k <= 1 || k >= d) throw std::domain_error("f_star: requires integer 1 < k < d");
  if (i < 1 || i > d - 2) throw std::domain_error("f_star: requires 1 <= i <= d-2");
  const long lo = std::max(0L, i - k + 1);
  const long hi = std::min<long>(i - 1, d - k - 1);
  const BigRational choose_dk(binomial(d, k));
  BigInt total = 0;
  for (long j = lo; j <= hi; ++j) {
    const BigRational term = choose_dk * BigRational(int_pow(2, static_cast<unsigned>(d - j))) *
                             BigRational(binomial(d - k, j)) * BigRational(binomial(k, i - j)) /
                             BigRational(binomial(d - i, d - k - j));
    if (!is_integer(term)) throw std::logic_error("f_star: non-integer summand");
    total += numerator(term);
  }
  return total;
}

namespace {

FVector cube_f_vector(int d) {
  FVector f;
  for (int i = 0; i < d; ++i) f.counts.push_back(cube_face_count(d, i));
  return f;
}

FVector cross_f_vector(int d) {
  FVector f;
  for (int i = 0; i < d; ++i) f.counts.push_back(cross_face_count(d, i));
  return f;
}

}  // namespace

FVector f_vector(const Params& p, Family family) {
  if (!p.k_is_integer())
    throw std::domain_error("f_vector: closed form beyond the facet count needs integer k");
  const int d = p.d();
  const long k = p.k_as_integer();
  FVector f;
  if (k == 1) {
    f = cube_f_vector(d);
  } else if (k == d) {
    f = cross_f_vector(d);
  } else {
    f.counts.assign(static_cast<std::size_t>(d), BigInt(0));
    f.counts[0] = int_pow(2, static_cast<unsigned>(d)) + 2 * d;
    f.counts[static_cast<std::size_t>(d - 1)] = facet_count(p);
    for (int i = 1; i <= d - 2; ++i) {
      BigInt fi = f_star(d, k, i);
      if (i < k - 1) fi += cross_face_count(d, i);  // shared with beta_d
      if (i < d - k) fi += cube_face_count(d, i);   // shared with gamma_d / k
      f.counts[static_cast<std::size_t>(i)] = fi;
    }
  }
  if (!f.euler_ok()) throw std::logic_error("f_vector: Euler relation violated");
  return family == Family::primal ? f : f.reversed();
}

std::pair<BigInt, bool> total_faces_and_kalai(const Params& p) {
  const BigInt total = 1 + f_vector(p).total_proper();
  const BigInt bound = int_pow(3, static_cast<unsigned>(p.d()));
  return {total, total >= bound};
}

namespace {

// Layout of the vertex list of rho(d,k): the 2d axis points +-e_i (present
// when k > 1) followed by the 2^d scaled cube vertices (present when k < d,
// and always for d = 1). Cube vertex for a bit mask has coordinate i equal
// to -1/k when bit i is set, +1/k otherwise.
struct RhoLayout {
  int d;
  bool has_axis;
  bool has_cube;
  int cube_base;  // index of cube mask 0

  explicit RhoLayout(const Params& p)
      : d(p.d()),
        has_axis(p.k() > 1),
        has_cube(p.k() < p.d() || p.d() == 1),
        cube_base(has_axis ? 2 * p.d() : 0) {
    if (d > 16)
      throw std::length_error("explicit rho/rho* representations are limited to d <= 16");
  }

  int axis_index(int coord, bool negative) const { return 2 * coord + (negative ? 1 : 0); }
  int cube_index(unsigned mask) const { return cube_base + static_cast<int>(mask); }
  int total() const {
    return (has_axis ? 2 * d : 0) + (has_cube ? (1 << d) : 0);
  }
};

std::vector<VectorQ> rho_vertices(const Params& p, const RhoLayout& layout) {
  const int d = p.d();
  std::vector<VectorQ> vertices;
  vertices.reserve(static_cast<std::size_t>(layout.total()));
  if (layout.has_axis) {
    for (int i = 0; i < d; ++i) {
      for (int sign = 0; sign < 2; ++sign) {
        VectorQ v(static_cast<std::size_t>(d), BigRational(0));
        v[static_cast<std::size_t>(i)] = sign == 0 ? 1 : -1;
        vertices.push_back(std::move(v));
      }
    }
  }
  if (layout.has_cube) {
    const BigRational inv_k = 1 / p.k();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      VectorQ v(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        v[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -inv_k : inv_k;
      vertices.push_back(std::move(v));
    }
  }
  return vertices;
}

std::vector<std::vector<int>> subsets_of_size(int d, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int pos = size - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == d - size + pos) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j)
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Cube vertices whose coordinates on `fixed` match the sign mask
// (sign bit set means the -1/k side).
void append_cube_face_vertices(const RhoLayout& layout, const std::vector<int>& fixed,
                               unsigned sign_mask, std::vector<int>* out) {
  const int d = layout.d;
  std::vector<int> free_coords;
  free_coords.reserve(static_cast<std::size_t>(d - fixed.size()));
  {
    std::size_t fi = 0;
    for (int i = 0; i < d; ++i) {
      if (fi < fixed.size() && fixed[fi] == i)
        ++fi;
      else
        free_coords.push_back(i);
    }
  }
  unsigned base = 0;
  for (std::size_t j = 0; j < fixed.size(); ++j)
    if ((sign_mask >> j) & 1u) base |= 1u << fixed[j];
  const unsigned free_count = static_cast<unsigned>(free_coords.size());
  for (unsigned sub = 0; sub < (1u << free_count); ++sub) {
    unsigned mask = base;
    for (unsigned j = 0; j < free_count; ++j)
      if ((sub >> j) & 1u) mask |= 1u << free_coords[j];
    out->push_back(layout.cube_index(mask));
  }
}

template <class Visit>
void for_each_facet(const Params& p, const RhoLayout& layout, Visit&& visit) {
  const int d = p.d();
  if (p.k_is_integer()) {
    const int k = static_cast<int>(p.k_as_integer());
    for (const auto& subset : subsets_of_size(d, k)) {
      for (unsigned signs = 0; signs < (1u << k); ++signs) {
        Inequality ineq{VectorQ(static_cast<std::size_t>(d), BigRational(0)), BigRational(1)};
        std::vector<int> verts;
        for (int j = 0; j < k; ++j) {
          const bool neg = (signs >> j) & 1u;
          ineq.normal[static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])] = neg ? -1 : 1;
          if (layout.has_axis)
            verts.push_back(layout.axis_index(subset[static_cast<std::size_t>(j)], neg));
        }
        if (layout.has_cube) append_cube_face_vertices(layout, subset, signs, &verts);
        std::sort(verts.begin(), verts.end());
        visit(std::move(ineq), std::move(verts));
      }
    }
    return;
  }
  const int m = static_cast<int>(p.floor_k());
  const BigRational frac = p.k() - BigRational(m);
  for (const auto& subset : subsets_of_size(d, m + 1)) {
    for (unsigned signs = 0; signs < (1u << (m + 1)); ++signs) {
      for (int drop = 0; drop <= m; ++drop) {
        Inequality ineq{VectorQ(static_cast<std::size_t>(d), BigRational(0)), BigRational(1)};
        std::vector<int> verts;
        for (int j = 0; j <= m; ++j) {
          const bool neg = (signs >> j) & 1u;
          const BigRational sign(neg ? -1 : 1);
          const std::size_t coord = static_cast<std::size_t>(subset[static_cast<std::size_t>(j)]);
          if (j == drop) {
            ineq.normal[coord] = sign * frac;
          } else {
            ineq.normal[coord] = sign;
            verts.push_back(layout.axis_index(subset[static_cast<std::size_t>(j)], neg));
          }
        }
        append_cube_face_vertices(layout, subset, signs, &verts);
        std::sort(verts.begin(), verts.end());
        visit(std::move(ineq), std::move(verts));
      }
    }
  }
}

}  // namespace

std::vector<std::vector<int>> facet_vertex_sets(const Params& p) {
  const RhoLayout layout(p);
  std::vector<std::vector<int>> sets;
  for_each_facet(p, layout, [&](Inequality&&, std::vector<int>&& verts) {
    sets.push_back(std::move(verts));
  });
  return sets;
}

PolytopeRep rep_rho(const Params& p) {
  const RhoLayout layout(p);
  PolytopeRep rep;
  rep.dim = p.d();
  rep.vertices = rho_vertices(p, layout);
  for_each_facet(p, layout, [&](Inequality&& ineq, std::vector<int>&&) {
    rep.facets.push_back(std::move(ineq));
  });
  return rep;
}

PolytopeRep hrep_rho(const Params& p) {
  if (!p.k_is_integer())
    throw std::domain_error("hrep_rho: the sign-sum inequality description needs integer k");
  return rep_rho(p);
}

PolytopeRep rep_rho_star(const Params& p) {
  if (!p.k_is_integer())
    throw std::domain_error("rep_rho_star: no closed vertex description for non-integer k");
  const int d = p.d();
  const int k = static_cast<int>(p.k_as_integer());
  const RhoLayout layout(p);
  PolytopeRep rep;
  rep.dim = d;
  for (const auto& subset : subsets_of_size(d, k)) {
    for (unsigned signs = 0; signs < (1u << k); ++signs) {
      VectorQ v(static_cast<std::size_t>(d), BigRational(0));
      for (int j = 0; j < k; ++j)
        v[static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])] =
            (signs >> j) & 1u ? -1 : 1;
      rep.vertices.push_back(std::move(v));
    }
  }
  // Facet i is polar to vertex i of rep_rho(p): axis inequalities to the
  // axis points, sign-sum inequalities to the scaled cube vertices.
  if (layout.has_axis) {
    for (int i = 0; i < d; ++i) {
      for (int sign = 0; sign < 2; ++sign) {
        Inequality ineq{VectorQ(static_cast<std::size_t>(d), BigRational(0)), BigRational(1)};
        ineq.normal[static_cast<std::size_t>(i)] = sign == 0 ? 1 : -1;
        rep.facets.push_back(std::move(ineq));
      }
    }
  }
  if (layout.has_cube) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      Inequality ineq{VectorQ(static_cast<std::size_t>(d), BigRational(0)), BigRational(k)};
      for (int i = 0; i < d; ++i)
        ineq.normal[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
      rep.facets.push_back(std::move(ineq));
    }
  }
  return rep;
}

}  // namespace polyball

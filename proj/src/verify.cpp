#include "polyball/verify.hpp"

#include "polyball/combinatorics.hpp"
#include "polyball/face_lattice.hpp"
#include "polyball/norms.hpp"
#include "polyball/oracle.hpp"
#include "polyball/volume.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyball {

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

int Report::failures() const {
  int n = 0;
  for (const Check& c : checks)
    if (!c.passed) ++n;
  return n;
}

namespace {

void check(Report& report, const std::string& name, bool passed, std::string detail = "") {
  report.checks.push_back({name, passed, std::move(detail)});
}

std::string fmt(int d, const BigRational& k) {
  return "d=" + std::to_string(d) + " k=" + to_string(k);
}

// Rational in [1, span] with denominator up to 6.
BigRational random_k(XorShift64Star& rng, long span) {
  const long den = 1 + static_cast<long>(rng.next() % 6);
  const long max_num = span * den;
  const long num = den + static_cast<long>(rng.next() % static_cast<std::uint64_t>(
                                               std::max(1L, max_num - den + 1)));
  return make_rational(num, den);
}

VectorQ random_vector(XorShift64Star& rng, int d, int magnitude = 8, int max_den = 4) {
  VectorQ x(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const long num = static_cast<long>(rng.next() % (2 * magnitude + 1)) - magnitude;
    const long den = 1 + static_cast<long>(rng.next() % max_den);
    x[static_cast<std::size_t>(i)] = make_rational(num, den);
  }
  return x;
}

std::vector<BigRational> half_integer_grid(int d) {
  std::vector<BigRational> grid;
  for (long j = 2; j <= 2L * d; ++j) grid.push_back(make_rational(j, 2));
  return grid;
}

}  // namespace

Report verify_fvector(int dmax) {
  Report report{"fvector", {}};
  const int lattice_max = std::min(dmax, 6);

  for (int d = 1; d <= lattice_max; ++d) {
    for (long k = 1; k <= d; ++k) {
      const Params p(d, k);
      const FVector closed = f_vector(p);
      const FaceLattice lattice = enumerate_faces(rep_rho(p));
      check(report, "fvector closed=oracle " + fmt(d, p.k()), closed == lattice.f,
            "closed " + closed.to_string() + " vs oracle " + lattice.f.to_string());
      check(report, "fvector dual reversal " + fmt(d, p.k()),
            f_vector(p, Family::dual) == closed.reversed());
    }
  }
  for (int d = 2; d <= std::min(lattice_max, 5); ++d) {
    for (long k = 1; k <= d; ++k) {
      const Params p(d, k);
      const FaceLattice dual = enumerate_faces(rep_rho_star(p));
      check(report, "dual lattice reversal " + fmt(d, p.k()),
            dual.f == f_vector(p).reversed(),
            "dual oracle " + dual.f.to_string());
    }
  }

  // Non-integer k: the closed form covers only the facet count.
  for (int d = 2; d <= std::min(dmax, 5); ++d) {
    for (const BigRational& k : half_integer_grid(d)) {
      if (is_integer(k)) continue;
      const Params p(d, k);
      const BigInt sets(static_cast<long>(facet_vertex_sets(p).size()));
      check(report, "facet sets count " + fmt(d, k), sets == facet_count(p),
            sets.str() + " sets vs " + facet_count(p).str());
      if (d <= 4) {
        const FaceLattice lattice = enumerate_faces(rep_rho(p));
        check(report, "facet count oracle " + fmt(d, k),
              lattice.f.counts.back() == facet_count(p),
              "oracle " + lattice.f.counts.back().str() + " vs closed " +
                  facet_count(p).str());
      }
    }
  }
  for (int d = 2; d <= std::min(dmax, 5); ++d) {
    for (long k = 1; k <= d; ++k) {
      const Params p(d, k);
      const BigInt sets(static_cast<long>(facet_vertex_sets(p).size()));
      check(report, "facet sets count " + fmt(d, p.k()), sets == facet_count(p));
    }
  }

  {
    const FVector cell24 = f_vector(Params(4, 2));
    check(report, "24-cell palindrome", cell24 == cell24.reversed(), cell24.to_string());
  }
  for (int d = 1; d <= std::max(dmax, 12); ++d) {
    bool euler = true;
    bool kalai = true;
    for (long k = 1; k <= d; ++k) {
      const Params p(d, k);
      if (!f_vector(p).euler_ok()) euler = false;
      if (!total_faces_and_kalai(p).second) kalai = false;
    }
    check(report, "euler relation d=" + std::to_string(d), euler);
    check(report, "kalai bound d=" + std::to_string(d), kalai);
  }
  return report;
}

Report verify_volume(long long samples, std::uint64_t seed, int mc_dmax) {
  Report report{"volume", {}};
  XorShift64Star rng(seed);
  mc_dmax = std::min(std::max(mc_dmax, 2), 6);

  {
    bool ok = true;
    for (int m = 0; m <= 30 && ok; ++m) {
      const BigRational k = random_k(rng, 30);
      BigRational sum = 0;
      for (int l = 0; l <= m; ++l)
        sum += rat_pow(k, l - 1) * (k - l) / BigRational(factorial(static_cast<unsigned>(l)));
      ok = sum == rat_pow(k, m) / BigRational(factorial(static_cast<unsigned>(m)));
    }
    check(report, "telescoping piece sum m<=30", ok);
  }
  {
    bool ok = true;
    for (int d = 1; d <= 30 && ok; ++d) {
      const BigRational k = random_k(rng, d);
      BigRational sum = 0;
      for (int i = 0; i <= d; ++i) {
        const BigRational term = BigRational(binomial(d, i)) * rat_pow(k - i, d - 1);
        sum += i % 2 == 0 ? term : -term;
      }
      ok = sum == 0;
    }
    check(report, "alternating binomial identity d<=30", ok);
  }
  for (int d = 1; d <= 8; ++d) {
    bool ok = true;
    for (const BigRational& k : half_integer_grid(d)) {
      const Params p(d, k);
      BigRational pieces = 0;
      for (long l = 0; l <= p.floor_k(); ++l)
        pieces += BigRational(int_pow(2, static_cast<unsigned>(l)) * binomial(d, l)) *
                  piece_volume(d, k, static_cast<int>(l));
      if (pieces != rat_pow(k, d) * volume_rho(p)) ok = false;
    }
    check(report, "piece decomposition d=" + std::to_string(d), ok);
  }
  for (int d = 1; d <= 10; ++d) {
    bool ok = true;
    for (const BigRational& k : half_integer_grid(d)) {
      const VectorQ ones(static_cast<std::size_t>(d), BigRational(1));
      if (orthant_volume_rho_star(Params(d, k)) != halfspace_cube_volume(ones, k)) ok = false;
    }
    check(report, "orthant = half-space d=" + std::to_string(d), ok);
  }
  for (int d = 1; d <= 10; ++d) {
    bool ok = true;
    for (long k = 1; k <= d; ++k) {
      BigRational eulerian_sum = 0;
      for (long l = 0; l < k; ++l)
        eulerian_sum += BigRational(eulerian(static_cast<unsigned>(d), static_cast<unsigned>(l)));
      eulerian_sum /= BigRational(factorial(static_cast<unsigned>(d)));
      if (orthant_volume_rho_star(Params(d, k)) != eulerian_sum) ok = false;
    }
    check(report, "eulerian decomposition d=" + std::to_string(d), ok);
  }
  for (int d = 2; d <= 10; ++d) {
    bool ok = true;
    for (long k = 1; k <= d; ++k) {
      const Params p(d, k);
      SurdValue rhs = slice_volume_delta(d, p.k())
                          .scaled(BigRational(int_pow(2, static_cast<unsigned>(d))));
      if (k >= 2)
        rhs += SurdValue(BigRational(2 * d) * volume_rho_star(Params(d - 1, k - 1)));
      if (!(boundary_volume_rho_star(p) == rhs)) ok = false;
    }
    check(report, "dual boundary facet decomposition d=" + std::to_string(d), ok);
  }
  {
    bool ok = true;
    for (int d = 2; d <= 50 && ok; ++d) ok = volume_rho(Params(d, 2)) == 2;
    check(report, "volume rho(d,2) = 2 for d<=50", ok);
  }

  // Exact triangulation of the bodies themselves.
  for (int d = 1; d <= 4; ++d) {
    bool ok = true;
    for (const BigRational& k : half_integer_grid(d)) {
      const Params p(d, k);
      if (triangulation_volume(rep_rho(p)) != volume_rho(p)) ok = false;
      if (p.k_is_integer() && triangulation_volume(rep_rho_star(p)) != volume_rho_star(p))
        ok = false;
    }
    check(report, "triangulated volume = closed d=" + std::to_string(d), ok);
  }
  {
    bool ok = true;
    for (const BigRational& k : {make_rational(3, 2), make_rational(5, 2)}) {
      const Params p(3, k);
      if (triangulation_volume(rep_rho_star_enumerated(p)) != volume_rho_star(p)) ok = false;
    }
    check(report, "triangulated dual volume, non-integer k, d=3", ok);
  }

  {
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      const int d = 2 + static_cast<int>(rng.next() % 4);
      VectorQ a(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        long v = static_cast<long>(rng.next() % 9) - 4;
        if (v == 0) v = 5;
        a[static_cast<std::size_t>(i)] = v;
      }
      const BigRational c = make_rational(static_cast<long>(rng.next() % 13) - 6, 1 + static_cast<long>(rng.next() % 3));
      const BigRational lambda = make_rational(1 + static_cast<long>(rng.next() % 7), 1 + static_cast<long>(rng.next() % 4));
      VectorQ scaled_a = a;
      for (BigRational& v : scaled_a) v *= lambda;
      if (!(cube_section_volume(a, c) == cube_section_volume(scaled_a, c * lambda))) ok = false;
      if (halfspace_cube_volume(a, c) + halfspace_cube_volume(scaled_a, c * lambda) !=
          halfspace_cube_volume(a, c) * 2)
        ok = false;  // same half-space under scaling
      VectorQ neg_a = a;
      for (BigRational& v : neg_a) v = -v;
      if (halfspace_cube_volume(a, c) + halfspace_cube_volume(neg_a, -c) != 1) ok = false;
    }
    check(report, "section/half-space scaling and complement", ok);
  }

  // Monte Carlo agreement at four standard errors.
  for (int d = 2; d <= mc_dmax; ++d) {
    bool ok = true;
    std::ostringstream detail;
    for (const BigRational& k : half_integer_grid(d)) {
      const Params p(d, k);
      for (const bool dual : {false, true}) {
        const MembershipFn member = dual ? MembershipFn([p](const VectorD& x) {
          return is_member(member_rho_star(x, p));
        })
                                         : MembershipFn([p](const VectorD& x) {
                                             return is_member(member_rho(x, p));
                                           });
        const auto estimate = monte_carlo_volume(member, d, BigRational(1), samples, seed,
                                                 /*workers=*/4);
        const double exact = to_double(dual ? volume_rho_star(p) : volume_rho(p));
        const double slack = 4.0 * estimate.std_error + 1e-12;
        if (std::abs(estimate.volume - exact) > slack) {
          ok = false;
          detail << (dual ? "dual " : "primal ") << fmt(d, k) << " est " << estimate.volume
                 << " exact " << exact << "; ";
        }
      }
    }
    check(report, "monte carlo 4-sigma d=" + std::to_string(d), ok, detail.str());
  }
  return report;
}

Report verify_boundary() {
  Report report{"boundary", {}};
  const std::vector<std::pair<int, long>> cases = {{2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 4}};
  for (const auto& [d, k] : cases) {
    const Params p(d, k);
    const BoundaryVolumeRho closed = boundary_volume_rho(p);
    const SurdValue triangulated = boundary_triangulation_measure(rep_rho(p));
    check(report, "triangulation = corrected " + fmt(d, p.k()),
          triangulated == closed.corrected,
          "triangulated " + triangulated.to_string() + " vs corrected " +
              closed.corrected.to_string());
    check(report, "corrected = d x printed " + fmt(d, p.k()),
          closed.corrected == closed.as_printed.scaled(BigRational(d)),
          "printed " + closed.as_printed.to_string());
    if (k == 1) {
      check(report, "cube boundary value " + fmt(d, p.k()),
            closed.corrected == SurdValue(BigRational(d) * BigRational(int_pow(2, static_cast<unsigned>(d)))));
    }
    if (k == d) {
      const SurdValue expected = SurdValue::term(
          make_rational(int_pow(2, static_cast<unsigned>(d)),
                        factorial(static_cast<unsigned>(d - 1))),
          BigInt(d));
      check(report, "cross-polytope boundary value " + fmt(d, p.k()),
            closed.corrected == expected, expected.to_string());
    }
  }
  {
    const Params p(3, 2);
    SurdValue expected(BigRational(12));
    expected += SurdValue::term(BigRational(4), BigInt(3));
    const SurdValue closed = boundary_volume_rho_star(p);
    const SurdValue triangulated = boundary_triangulation_measure(rep_rho_star(p));
    check(report, "dual boundary (3,2) = 12 + 4 sqrt(3)", closed == expected, closed.to_string());
    check(report, "dual boundary (3,2) triangulated termwise", triangulated == expected,
          triangulated.to_string());
  }
  for (int d = 2; d <= 4; ++d) {
    bool ok = true;
    for (long k = 1; k <= d; ++k) {
      const Params p(d, k);
      if (!(boundary_triangulation_measure(rep_rho_star(p)) == boundary_volume_rho_star(p)))
        ok = false;
    }
    check(report, "dual boundary triangulation d=" + std::to_string(d), ok);
  }
  {
    const Params p(3, 2);
    const SurdValue first = boundary_triangulation_measure(rep_rho(p), FanApex::first_vertex);
    const SurdValue last = boundary_triangulation_measure(rep_rho(p), FanApex::last_vertex);
    check(report, "triangulation apex independence (3,2)", first == last);
  }
  return report;
}

Report verify_norm(std::uint64_t seed) {
  Report report{"norm", {}};
  XorShift64Star rng(seed);

  bool closed_vs_variational = true;
  bool float_path = true;
  bool gauge_ok = true;
  bool monotone = true;
  for (int d = 1; d <= 6; ++d) {
    for (const BigRational& k : half_integer_grid(d)) {
      const Params p(d, k);
      for (int trial = 0; trial < 12; ++trial) {
        const VectorQ x = random_vector(rng, d);
        const BigRational exact = knorm(x, p);
        if (exact != knorm_variational(x, p)) closed_vs_variational = false;
        const VectorD xd = to_double_vector(x);
        if (std::abs(knorm(xd, p) - knorm_variational(xd, p)) > 1e-12) float_path = false;
        if (zero_norm(x) > 0) {
          const double gauge = gauge_bisection(
              [p](const VectorD& y) { return is_member(member_rho(y, p)); }, xd);
          if (std::abs(gauge - to_double(exact)) > 2e-9) gauge_ok = false;
          const double dual_gauge = gauge_bisection(
              [p](const VectorD& y) { return is_member(member_rho_star(y, p)); }, xd);
          if (std::abs(dual_gauge - to_double(dual_norm(x, p))) > 2e-9) gauge_ok = false;
        }
      }
    }
    // knorm is nondecreasing in k and interpolates max-norm to 1-norm.
    for (int trial = 0; trial < 8; ++trial) {
      const VectorQ x = random_vector(rng, d);
      BigRational previous = knorm(x, Params(d, 1));
      BigRational linf = 0;
      BigRational l1 = 0;
      for (const BigRational& c : x) {
        const BigRational a = abs(c);
        l1 += a;
        if (a > linf) linf = a;
      }
      if (previous != linf) monotone = false;
      for (const BigRational& k : half_integer_grid(d)) {
        const BigRational current = knorm(x, Params(d, k));
        if (current < previous) monotone = false;
        previous = current;
      }
      if (previous != l1) monotone = false;
    }
  }
  check(report, "closed form = variational scan (exact)", closed_vs_variational);
  check(report, "closed form = variational scan (float, 1e-12)", float_path);
  check(report, "gauge bisection matches both norms (1e-9)", gauge_ok);
  check(report, "monotone interpolation max-norm to 1-norm", monotone);

  {
    bool axioms = true;
    for (int trial = 0; trial < 60; ++trial) {
      const int d = 1 + static_cast<int>(rng.next() % 6);
      const auto grid = half_integer_grid(d);
      const Params p(d, grid[rng.next() % grid.size()]);
      const VectorQ x = random_vector(rng, d);
      const VectorQ y = random_vector(rng, d);
      const BigRational lambda = make_rational(static_cast<long>(rng.next() % 9) - 4,
                                               1 + static_cast<long>(rng.next() % 3));
      VectorQ sum(x.size());
      VectorQ scaled(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        sum[i] = x[i] + y[i];
        scaled[i] = lambda * x[i];
      }
      if (knorm(sum, p) > knorm(x, p) + knorm(y, p)) axioms = false;
      if (knorm(scaled, p) != abs(lambda) * knorm(x, p)) axioms = false;
      if (dual_norm(sum, p) > dual_norm(x, p) + dual_norm(y, p)) axioms = false;
      if (dual_norm(scaled, p) != abs(lambda) * dual_norm(x, p)) axioms = false;
    }
    check(report, "norm axioms on random triples", axioms);
  }

  {
    // Support over the vertices of one ball gives the other ball's gauge.
    bool duality = true;
    for (int d = 1; d <= 5 && duality; ++d) {
      for (const BigRational& k : half_integer_grid(d)) {
        const Params p(d, k);
        const PolytopeRep rho = rep_rho(p);
        for (int trial = 0; trial < 6; ++trial) {
          const VectorQ x = random_vector(rng, d);
          BigRational support = 0;
          for (const VectorQ& v : rho.vertices) {
            const BigRational s = dot(x, v);
            if (s > support) support = s;
          }
          if (support != dual_norm(x, p)) duality = false;
          if (p.k_is_integer()) {
            const PolytopeRep star = rep_rho_star(p);
            BigRational dual_support = 0;
            for (const VectorQ& v : star.vertices) {
              const BigRational s = dot(x, v);
              if (s > dual_support) dual_support = s;
            }
            if (dual_support != knorm(x, p)) duality = false;
          }
        }
      }
    }
    check(report, "vertex support duality", duality);
  }

  {
    bool sparsity = true;
    for (int d = 2; d <= 5; ++d) {
      VectorQ x(static_cast<std::size_t>(d));
      // exhaustive over {-1, 0, 1}^d
      const long total = int_pow(3, static_cast<unsigned>(d)).convert_to<long>();
      for (long code = 0; code < total; ++code) {
        long rest = code;
        for (int i = 0; i < d; ++i) {
          x[static_cast<std::size_t>(i)] = BigRational(rest % 3 - 1);
          rest /= 3;
        }
        for (long k = 1; k < d; ++k) {
          for (long l = k + 1; l <= d; ++l) {
            const BigRational gap = sparsity_gap(x, k, l);
            if (gap > 0) sparsity = false;
            if ((gap == 0) != (zero_norm(x) <= k)) sparsity = false;
          }
        }
      }
    }
    check(report, "sparsity gap equivalence on {-1,0,1}^d, d<=5", sparsity);
  }

  {
    bool membership = true;
    for (int trial = 0; trial < 200; ++trial) {
      const int d = 1 + static_cast<int>(rng.next() % 6);
      const auto grid = half_integer_grid(d);
      const Params p(d, grid[rng.next() % grid.size()]);
      const VectorQ x = random_vector(rng, d, 2, 4);
      if (is_member(member_rho(x, p)) != (knorm(x, p) <= 1)) membership = false;
      if (is_member(member_rho_star(x, p)) != (dual_norm(x, p) <= 1)) membership = false;
    }
    check(report, "membership = gauge <= 1", membership);
  }
  return report;
}

std::vector<Report> verify_all(int dmax, long long samples, std::uint64_t seed) {
  return {verify_fvector(dmax), verify_volume(samples, seed, std::min(dmax, 4)),
          verify_boundary(), verify_norm(seed)};
}

std::string report_json(const std::vector<Report>& reports) {
  nlohmann::json doc = nlohmann::json::array();
  for (const Report& report : reports) {
    nlohmann::json entry;
    entry["suite"] = report.suite;
    entry["passed"] = static_cast<int>(report.checks.size()) - report.failures();
    entry["failed"] = report.failures();
    entry["checks"] = nlohmann::json::array();
    for (const Check& c : report.checks) {
      nlohmann::json item;
      item["name"] = c.name;
      item["status"] = c.passed ? "pass" : "fail";
      if (!c.detail.empty()) item["detail"] = c.detail;
      entry["checks"].push_back(std::move(item));
    }
    doc.push_back(std::move(entry));
  }
  return doc.dump(2);
}

}  // namespace polyball

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyball {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool all_passed() const;
  int failures() const;
};

// Closed-form f-vectors against the face-lattice oracle (primal and dual),
// non-integer facet counts, Euler relation, Kalai bound.
Report verify_fvector(int dmax = 6);

// Exact volume identities (telescoping, alternating, piece decomposition,
// half-space consistency, Eulerian decomposition, dual-boundary facet
// decomposition), exact triangulation cross-checks, and Monte Carlo
// agreement at 4 standard errors for 2 <= d <= mc_dmax (capped at 6).
Report verify_volume(long long samples = 1000000, std::uint64_t seed = 20240809,
                     int mc_dmax = 4);

// Boundary-volume arbitration: exact facet triangulations against the
// corrected closed form and the factor-d discrepancy of the printed one.
Report verify_boundary();

// Closed-form norm against the variational scan and gauge bisection on
// seeded random vectors, plus norm axioms, duality and sparsity checks.
Report verify_norm(std::uint64_t seed = 20240809);

std::vector<Report> verify_all(int dmax, long long samples, std::uint64_t seed);

// {"suite": ..., "passed": n, "failed": m, "checks": [...]}
std::string report_json(const std::vector<Report>& reports);

}  // namespace polyball

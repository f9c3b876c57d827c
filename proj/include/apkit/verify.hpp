#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apkit/identity.hpp"

namespace apkit {

struct GridMismatch {
  std::string instance;
  std::string expected;  // oracle value
  std::string actual;    // formula value
};

struct GridOutcome {
  std::string name;
  long long checks = 0;
  std::vector<GridMismatch> mismatches;
  double elapsed_ms = 0.0;

  bool ok() const { return mismatches.empty(); }
};

// Hard caps on the oracle-equivalence grids: brute-force enumeration is the
// reference on every cell, so the ranges stay at desk scale.
inline constexpr long long kMaxPartitionGridN = 12;
inline constexpr long long kMaxSubsetGridN = 14;

// Closed forms vs the brute-force partition oracle, every type bound to
// every n <= max_n and every m in [1, n], restricted to the formula's regime.
GridOutcome run_positive_delta_grid(long long max_n, long long jobs = 1);
GridOutcome run_boundary_delta_grid(long long max_n, long long jobs = 1);

// Subset formulas vs the brute-force subset oracle.
GridOutcome run_mansour_sun_grid(long long max_n, long long jobs = 1);
GridOutcome run_separated_mpk_grid(long long max_n, long long jobs = 1);          // n = mpk
GridOutcome run_separated_mpk_minus_m_grid(long long max_n, long long jobs = 1);  // n = mpk-m
GridOutcome run_hwang_grid(long long max_n, long long jobs = 1);                  // k <= n/2

// Bijection suites: scaling round-trip and type preservation; residue
// decompose/compose round-trip with the row-sum system; count invariance
// under m -> gcd(m, n); subset <-> partition correspondence.
GridOutcome run_scaling_grid(long long max_n, long long jobs = 1);
GridOutcome run_residue_grid(long long max_n, long long jobs = 1);
GridOutcome run_count_invariance_grid(long long max_n, long long jobs = 1);
GridOutcome run_subset_correspondence_grid(long long max_n, long long jobs = 1);

// Residue multi-sum vs the oracle on every regime (it is the bijection-level
// count), plus the dominance-condition implication grid (pure arithmetic).
GridOutcome run_multi_sum_grid(long long max_n, long long jobs = 1);
GridOutcome run_cwz_implication_grid(long long max_n, long long jobs = 1);

// Exhaustive Raney-Mohanty grid over every valid instance within the bounds.
GridOutcome run_rm_exhaustive_grid(long long m_max = 2, long long z_bound = 2,
                                   long long cap_bound = 3, long long xy_bound = 10,
                                   long long jobs = 1);

// Named registry used by the CLI: positive, boundary, msun, mpk, mpk-minus-m, hwang,
// bijections, multisum, cwz, rm.
std::vector<std::string> verify_grid_names();
std::vector<GridOutcome> run_verify(long long max_n, const std::vector<std::string>& names,
                                    long long jobs);

}  // namespace apkit

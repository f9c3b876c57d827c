#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apkit/exact.hpp"

namespace apkit {

// One instance of the Raney-Mohanty convolution identity
//
//   sum_{0 <= t_i <= N_i}  x/(x - t.z) binom(x - t.z; t_1..t_m)
//                        * y/(y - (N-t).z) binom(y - (N-t).z; N_1-t_1..N_m-t_m)
//   = (x+y)/(x+y - N.z) binom(x+y - N.z; N_1..N_m)
//
// where t.z = t_1 z_1 + ... + t_m z_m. The identity is polynomial in
// x, y, z_i; evaluating at integers must dodge the poles. An instance is
// "valid" when no lattice point hits one.
struct RmInstance {
  long long x = 0;
  long long y = 0;
  std::vector<long long> z;     // z_1..z_m
  std::vector<long long> caps;  // N_1..N_m, nonnegative

  long long m() const { return static_cast<long long>(z.size()); }
  void validate_shape() const;
  std::string to_string() const;
};

// How to evaluate at a lattice point whose denominator vanishes:
// reject (throw, naming the point) or fill with the limit convention.
enum class PolePolicy { reject, guarded };

// Lattice points (t_1..t_m) at which some denominator of the instance
// vanishes; empty means the instance is valid.
std::vector<std::vector<long long>> degenerate_points(const RmInstance& inst);

ExactRat rm_lhs(const RmInstance& inst, PolePolicy policy = PolePolicy::reject);
ExactRat rm_rhs(const RmInstance& inst, PolePolicy policy = PolePolicy::reject);

struct RmCheckReport {
  ExactRat lhs;
  ExactRat rhs;
  bool evaluated = false;  // false when an indeterminate term blocked evaluation
  bool equal = false;
  std::vector<std::vector<long long>> degenerate;  // reported, never silently skipped
  std::string note;
};

// Exact comparison; degenerate instances are evaluated in guarded mode and
// flagged. Errors are reified into the report instead of thrown.
RmCheckReport rm_check(const RmInstance& inst);

struct RmSuiteParams {
  long long m_max = 3;
  long long z_bound = 3;    // z_i in [-z_bound, z_bound]
  long long cap_bound = 4;  // N_i in [0, cap_bound]
  long long xy_bound = 30;  // x, y in [-xy_bound, xy_bound]
  long long trials = 1000;
  std::uint64_t seed = 42;
};

struct RmSuiteReport {
  long long trials = 0;
  long long passes = 0;
  long long failures = 0;
  std::optional<RmInstance> first_failure;
  std::uint64_t seed = 0;
};

// Evaluator hook for the right-hand side; tests inject a corrupted one to
// prove the harness can fail.
using RhsEvaluator = std::function<ExactRat(const RmInstance&)>;

// Deterministic seeded sampling of valid instances (degenerate draws are
// rejection-sampled away; running out of retries throws). Every instance is
// checked lhs == rhs exactly.
RmSuiteReport rm_random_suite(const RmSuiteParams& params, const RhsEvaluator& rhs_eval = {});

}  // namespace apkit

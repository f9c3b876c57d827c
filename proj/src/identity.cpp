#include "apkit/identity.hpp"

#include <random>
#include <stdexcept>

#include "apkit/numeric.hpp"

namespace apkit {

void RmInstance::validate_shape() const {
  if (z.empty() || z.size() != caps.size())
    throw std::domain_error("RmInstance: need |z| = |N| = m >= 1");
  for (long long c : caps)
    if (c < 0) throw std::domain_error("RmInstance: caps must be nonnegative");
}

std::string RmInstance::to_string() const {
  std::string s = "x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=(";
  for (std::size_t i = 0; i < z.size(); ++i)
    s += (i ? "," : "") + std::to_string(z[i]);
  s += ") N=(";
  for (std::size_t i = 0; i < caps.size(); ++i)
    s += (i ? "," : "") + std::to_string(caps[i]);
  return s + ")";
}

namespace {

std::string point_to_string(const std::vector<long long>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// Odometer over 0 <= t_i <= N_i.
template <typename Fn>
void for_each_lattice_point(const std::vector<long long>& caps, Fn&& fn) {
  std::vector<long long> t(caps.size(), 0);
  while (true) {
    fn(t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == caps[i]) t[i++] = 0;
    if (i == t.size()) return;
    ++t[i];
  }
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// x/(x-w) binom(x-w; ks) under the chosen pole policy.
ExactRat term(long long x, long long w, const std::vector<long long>& ks, PolePolicy policy,
              const std::vector<long long>& at_point) {
  if (x - w != 0) return guarded_cyclic_term(x, w, ks);
  if (policy == PolePolicy::reject)
    throw std::domain_error("rm evaluation: denominator vanishes at lattice point " +
                            point_to_string(at_point));
  try {
    return guarded_cyclic_term(x, w, ks);
  } catch (const std::domain_error&) {
    throw std::domain_error("rm evaluation: indeterminate term at lattice point " +
                            point_to_string(at_point));
  }
}

}  // namespace

std::vector<std::vector<long long>> degenerate_points(const RmInstance& inst) {
  inst.validate_shape();
  std::vector<std::vector<long long>> points;
  const long long nz = dot(inst.caps, inst.z);
  for_each_lattice_point(inst.caps, [&](const std::vector<long long>& t) {
    const long long tz = dot(t, inst.z);
    if (inst.x - tz == 0 || inst.y - (nz - tz) == 0 || inst.x + inst.y - nz == 0)
      points.push_back(t);
  });
  return points;
}

ExactRat rm_lhs(const RmInstance& inst, PolePolicy policy) {
  inst.validate_shape();
  const long long nz = dot(inst.caps, inst.z);
  ExactRat total;
  for_each_lattice_point(inst.caps, [&](const std::vector<long long>& t) {
    std::vector<long long> rest(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) rest[i] = inst.caps[i] - t[i];
    const long long tz = dot(t, inst.z);
    total += term(inst.x, tz, t, policy, t) * term(inst.y, nz - tz, rest, policy, t);
  });
  return total;
}

ExactRat rm_rhs(const RmInstance& inst, PolePolicy policy) {
  inst.validate_shape();
  const long long nz = dot(inst.caps, inst.z);
  return term(inst.x + inst.y, nz, inst.caps, policy, inst.caps);
}

RmCheckReport rm_check(const RmInstance& inst) {
  RmCheckReport report;
  report.degenerate = degenerate_points(inst);
  try {
    report.lhs = rm_lhs(inst, PolePolicy::guarded);
    report.rhs = rm_rhs(inst, PolePolicy::guarded);
    report.evaluated = true;
    report.equal = report.lhs == report.rhs;
    if (!report.degenerate.empty())
      report.note = "degenerate instance: " + std::to_string(report.degenerate.size()) +
                    " lattice point(s) required the limit convention";
  } catch (const std::exception& e) {
    report.evaluated = false;
    report.equal = false;
    report.note = e.what();
  }
  return report;
}

RmSuiteReport rm_random_suite(const RmSuiteParams& params, const RhsEvaluator& rhs_eval) {
  if (params.trials < 1) throw std::domain_error("rm_random_suite: trials must be >= 1");
  if (params.m_max < 1 || params.z_bound < 1 || params.cap_bound < 1 || params.xy_bound < 1)
    throw std::domain_error("rm_random_suite: bounds must be >= 1");

  std::mt19937_64 rng(params.seed);
  auto draw = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };

  RmSuiteReport report;
  report.seed = params.seed;
  const long long retries_per_trial = 10000;
  for (long long trial = 0; trial < params.trials; ++trial) {
    RmInstance inst;
    bool found = false;
    for (long long attempt = 0; attempt < retries_per_trial; ++attempt) {
      const long long m = draw(1, params.m_max);
      inst.z.resize(static_cast<std::size_t>(m));
      inst.caps.resize(static_cast<std::size_t>(m));
      for (auto& v : inst.z) v = draw(-params.z_bound, params.z_bound);
      for (auto& v : inst.caps) v = draw(0, params.cap_bound);
      inst.x = draw(-params.xy_bound, params.xy_bound);
      inst.y = draw(-params.xy_bound, params.xy_bound);
      if (degenerate_points(inst).empty()) {
        found = true;
        break;
      }
    }
    if (!found)
      throw std::runtime_error("rm_random_suite: could not sample a valid instance");
    ++report.trials;
    const ExactRat lhs = rm_lhs(inst);
    const ExactRat rhs = rhs_eval ? rhs_eval(inst) : rm_rhs(inst);
    if (lhs == rhs) {
      ++report.passes;
    } else {
      ++report.failures;
      if (!report.first_failure) report.first_failure = inst;
    }
  }
  return report;
}

}  // namespace apkit

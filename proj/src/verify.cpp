#include "apkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "apkit/enumerate.hpp"
#include "apkit/formulas.hpp"
#include "apkit/numeric.hpp"
#include "apkit/typespec.hpp"

namespace apkit {

namespace {

struct CellResult {
  long long checks = 0;
  std::vector<GridMismatch> mismatches;
};

using Cell = std::function<CellResult()>;

// Run cells possibly across threads; results are merged in input order so
// reports are deterministic regardless of the job count.
GridOutcome run_cells(std::string name, std::vector<Cell> cells, long long jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CellResult> results(cells.size());
  if (jobs <= 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = cells[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        try {
          results[i] = cells[i]();
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size());
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  GridOutcome out;
  out.name = std::move(name);
  for (auto& r : results) {
    out.checks += r.checks;
    for (auto& mm : r.mismatches) out.mismatches.push_back(std::move(mm));
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string describe(long long n, long long m, const PartitionType& t) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " type=" + format_type_spec(t);
}

long long clamp_cap(long long max_n, long long cap) { return std::min(max_n, cap); }

}  // namespace

GridOutcome run_positive_delta_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, kMaxPartitionGridN); ++n) {
    for (const PartitionType& t : PartitionType::all_bound_to(n)) {
      cells.push_back([n, t] {
        CellResult res;
        for (long long m = 1; m <= n; ++m) {
          if (delta_classify(n, m, t).regime != DeltaRegime::positive) continue;
          ++res.checks;
          const ExactInt formula = count_positive_delta(n, m, t);
          const long long oracle = count_ap_partitions(n, m, t);
          if (formula != oracle)
            res.mismatches.push_back(
                {describe(n, m, t), std::to_string(oracle), formula.str()});
        }
        return res;
      });
    }
  }
  return run_cells("positive", std::move(cells), jobs);
}

GridOutcome run_boundary_delta_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, kMaxPartitionGridN); ++n) {
    for (const PartitionType& t : PartitionType::all_bound_to(n)) {
      cells.push_back([n, t] {
        CellResult res;
        for (long long m = 1; m <= n; ++m) {
          const DeltaRegime regime = delta_classify(n, m, t).regime;
          if (regime != DeltaRegime::zero && regime != DeltaRegime::minus_d) continue;
          ++res.checks;
          const ExactInt formula = count_boundary_delta(n, m, t);
          const long long oracle = count_ap_partitions(n, m, t);
          if (formula != oracle)
            res.mismatches.push_back(
                {describe(n, m, t), std::to_string(oracle), formula.str()});
        }
        return res;
      });
    }
  }
  return run_cells("boundary", std::move(cells), jobs);
}

GridOutcome run_mansour_sun_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, kMaxSubsetGridN); ++n) {
    cells.push_back([n] {
      CellResult res;
      for (long long m = 1; m <= n; ++m)
        for (long long p = 1; m * p <= n; ++p)
          for (long long k = 0; m * p * k + 1 <= n; ++k) {
            ++res.checks;
            const ExactInt formula = count_mansour_sun(n, k, m, p);
            const long long oracle = count_separated_subsets({n, k, m, p});
            if (formula != oracle)
              res.mismatches.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                            " m=" + std::to_string(m) + " p=" + std::to_string(p),
                                        std::to_string(oracle), formula.str()});
          }
      return res;
    });
  }
  return run_cells("msun", std::move(cells), jobs);
}

GridOutcome run_separated_mpk_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  const long long cap = clamp_cap(max_n, kMaxSubsetGridN);
  for (long long m = 1; m <= cap; ++m)
    for (long long p = 1; m * p <= cap; ++p)
      for (long long k = 2; m * p * k <= cap; ++k) {
        cells.push_back([m, p, k] {
          CellResult res;
          res.checks = 1;
          const long long n = m * p * k;
          const ExactInt formula = count_separated_at_mpk(m, p, k);
          const long long oracle = count_separated_subsets({n, k, m, p});
          if (formula != oracle)
            res.mismatches.push_back({"m=" + std::to_string(m) + " p=" + std::to_string(p) +
                                          " k=" + std::to_string(k) + " (n=" + std::to_string(n) +
                                          ")",
                                      std::to_string(oracle), formula.str()});
          return res;
        });
      }
  return run_cells("mpk", std::move(cells), jobs);
}

GridOutcome run_separated_mpk_minus_m_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  const long long cap = clamp_cap(max_n, kMaxSubsetGridN);
  for (long long m = 1; m <= cap + 1; ++m)
    for (long long p = 1; p <= cap; ++p)
      for (long long k = 1; k <= cap; ++k) {
        if (p * k <= p + 1) continue;
        const long long n = m * p * k - m;
        if (n < 1 || n > cap) continue;
        cells.push_back([m, p, k, n] {
          CellResult res;
          res.checks = 1;
          const ExactInt formula = count_separated_at_mpk_minus_m(m, p, k);
          const long long oracle = count_separated_subsets({n, k, m, p});
          if (formula != oracle)
            res.mismatches.push_back({"m=" + std::to_string(m) + " p=" + std::to_string(p) +
                                          " k=" + std::to_string(k) + " (n=" + std::to_string(n) +
                                          ")",
                                      std::to_string(oracle), formula.str()});
          return res;
        });
      }
  return run_cells("mpk-minus-m", std::move(cells), jobs);
}

GridOutcome run_hwang_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 2; n <= clamp_cap(max_n, kMaxSubsetGridN); ++n) {
    cells.push_back([n] {
      CellResult res;
      for (long long m = 1; m < n; ++m)
        for (long long k = 0; k <= std::min<long long>(7, n / 2); ++k) {
          ++res.checks;
          const ExactInt formula = hwang_count(n, k, m);
          const long long oracle = count_separated_subsets({n, k, m, 1});
          if (formula != oracle)
            res.mismatches.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                          " m=" + std::to_string(m),
                                      std::to_string(oracle), formula.str()});
        }
      return res;
    });
  }
  return run_cells("hwang", std::move(cells), jobs);
}

GridOutcome run_scaling_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, 10); ++n) {
    for (const PartitionType& t : PartitionType::all_bound_to(n)) {
      cells.push_back([n, t] {
        CellResult res;
        for (long long m = 1; m <= n; ++m) {
          const ScalingUnit unit = find_scaling_unit(m, n);
          std::set<std::vector<std::pair<long long, long long>>> images;
          visit_ap_partitions(n, m, t, [&](const ApPartition& part) {
            ++res.checks;
            const ApPartition scaled = scale_partition(part, unit.a);
            if (scaled.type() != part.type())
              res.mismatches.push_back(
                  {describe(n, m, t) + " a=" + std::to_string(unit.a), "type preserved",
                   "type changed"});
            if (!(scale_partition(scaled, unit.a_inv) == part))
              res.mismatches.push_back(
                  {describe(n, m, t) + " a=" + std::to_string(unit.a), "round-trip identity",
                   "round-trip differs"});
            images.insert(scaled.key());
            return true;
          });
          // Injectivity: distinct partitions must scale to distinct images.
          const long long total = count_ap_partitions(n, m, t);
          if (static_cast<long long>(images.size()) != total)
            res.mismatches.push_back({describe(n, m, t), std::to_string(total) + " images",
                                      std::to_string(images.size())});
        }
        return res;
      });
    }
  }
  return run_cells("scaling", std::move(cells), jobs);
}

GridOutcome run_residue_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, kMaxPartitionGridN); ++n) {
    for (long long m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      for (const PartitionType& t : PartitionType::all_bound_to(n)) {
        cells.push_back([n, m, t] {
          CellResult res;
          visit_ap_partitions(n, m, t, [&](const ApPartition& part) {
            ++res.checks;
            const std::vector<ApPartition> comps = residue_decompose(part);
            // Row sums: component type counts add up to the full type.
            std::vector<long long> sums(static_cast<std::size_t>(t.max_part()), 0);
            for (const ApPartition& comp : comps)
              for (const ApBlock& b : comp.blocks)
                sums[static_cast<std::size_t>(b.length - 1)] += 1;
            if (PartitionType(sums) != t)
              res.mismatches.push_back(
                  {describe(n, m, t), "component types sum to the full type", "row sums differ"});
            if (!(residue_compose(n, part.difference == 0 ? n : part.difference, comps) == part))
              res.mismatches.push_back(
                  {describe(n, m, t), "compose(decompose(p)) = p", "round-trip differs"});
            return true;
          });
          return res;
        });
      }
    }
  }
  return run_cells("residue", std::move(cells), jobs);
}

GridOutcome run_count_invariance_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, 10); ++n) {
    for (const PartitionType& t : PartitionType::all_bound_to(n)) {
      cells.push_back([n, t] {
        CellResult res;
        for (long long m = 1; m <= n; ++m) {
          const long long d = std::gcd(m, n);
          if (d == m) continue;
          ++res.checks;
          const long long with_m = count_ap_partitions(n, m, t);
          const long long with_d = count_ap_partitions(n, d, t);
          if (with_m != with_d)
            res.mismatches.push_back(
                {describe(n, m, t), std::to_string(with_d), std::to_string(with_m)});
        }
        return res;
      });
    }
  }
  return run_cells("count-invariance", std::move(cells), jobs);
}

GridOutcome run_subset_correspondence_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, kMaxSubsetGridN); ++n) {
    cells.push_back([n] {
      CellResult res;
      for (long long m = 1; m <= n; ++m)
        for (long long p = 1; p <= n; ++p)
          for (long long k = 0; (p + 1) * k <= n; ++k) {
            ++res.checks;
            const SeparationSpec spec{n, k, m, p};
            const std::vector<std::vector<long long>> subsets =
                enumerate_separated_subsets(spec);
            const long long parts =
                count_ap_partitions(n, m, PartitionType::separation_type(n, k, p));
            if (static_cast<long long>(subsets.size()) != parts) {
              res.mismatches.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                            " m=" + std::to_string(m) +
                                            " p=" + std::to_string(p),
                                        std::to_string(parts), std::to_string(subsets.size())});
              continue;
            }
            for (const auto& subset : subsets) {
              const ApPartition part = subset_to_partition(n, m, p, subset);
              if (partition_to_subset(part, p) != subset) {
                res.mismatches.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                              " m=" + std::to_string(m) +
                                              " p=" + std::to_string(p),
                                          "bijection round-trip", "differs"});
                break;
              }
            }
          }
      return res;
    });
  }
  return run_cells("subset-correspondence", std::move(cells), jobs);
}

GridOutcome run_multi_sum_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, 10); ++n) {
    for (const PartitionType& t : PartitionType::all_bound_to(n)) {
      cells.push_back([n, t] {
        CellResult res;
        for (long long d = 1; d <= n; ++d) {
          if (n % d != 0) continue;
          ++res.checks;
          const ExactInt formula = residue_multi_sum_count(n, d, t);
          const long long oracle = count_ap_partitions(n, d, t);
          if (formula != oracle)
            res.mismatches.push_back(
                {describe(n, d, t), std::to_string(oracle), formula.str()});
        }
        return res;
      });
    }
  }
  return run_cells("multisum", std::move(cells), jobs);
}

GridOutcome run_cwz_implication_grid(long long max_n, long long jobs) {
  std::vector<Cell> cells;
  for (long long n = 1; n <= clamp_cap(max_n, 20); ++n) {
    cells.push_back([n] {
      CellResult res;
      for (const PartitionType& t : PartitionType::all_bound_to(n))
        for (long long m = 1; m <= n; ++m) {
          ++res.checks;
          if (!cwz_condition(m, t)) continue;
          if (delta_classify(n, m, t).regime != DeltaRegime::positive)
            res.mismatches.push_back(
                {describe(n, m, t), "cwz implies delta > 0", "delta not positive"});
        }
      return res;
    });
  }
  return run_cells("cwz", std::move(cells), jobs);
}

GridOutcome run_rm_exhaustive_grid(long long m_max, long long z_bound, long long cap_bound,
                                   long long xy_bound, long long jobs) {
  // One cell per (m, z-vector); each cell sweeps caps and x, y.
  std::vector<Cell> cells;
  for (long long m = 1; m <= m_max; ++m) {
    std::vector<long long> z(static_cast<std::size_t>(m), -z_bound);
    while (true) {
      cells.push_back([m, z, cap_bound, xy_bound] {
        CellResult res;
        std::vector<long long> caps(static_cast<std::size_t>(m), 0);
        while (true) {
          RmInstance inst;
          inst.z = z;
          inst.caps = caps;
          for (long long x = -xy_bound; x <= xy_bound; ++x)
            for (long long y = -xy_bound; y <= xy_bound; ++y) {
              inst.x = x;
              inst.y = y;
              if (!degenerate_points(inst).empty()) continue;
              ++res.checks;
              if (!(rm_lhs(inst) == rm_rhs(inst)))
                res.mismatches.push_back({inst.to_string(), "lhs = rhs", "differ"});
            }
          std::size_t i = 0;
          while (i < caps.size() && caps[i] == cap_bound) caps[i++] = 0;
          if (i == caps.size()) break;
          ++caps[i];
        }
        return res;
      });
      std::size_t i = 0;
      while (i < z.size() && z[i] == z_bound) z[i++] = -z_bound;
      if (i == z.size()) break;
      ++z[i];
    }
  }
  return run_cells("rm", std::move(cells), jobs);
}

std::vector<std::string> verify_grid_names() {
  return {"positive", "boundary", "msun", "mpk", "mpk-minus-m", "hwang", "bijections", "multisum", "cwz",
          "rm"};
}

std::vector<GridOutcome> run_verify(long long max_n, const std::vector<std::string>& names,
                                    long long jobs) {
  std::vector<std::string> wanted = names;
  if (wanted.empty()) wanted = verify_grid_names();
  std::vector<GridOutcome> out;
  for (const std::string& name : wanted) {
    if (name == "positive") {
      out.push_back(run_positive_delta_grid(max_n, jobs));
    } else if (name == "boundary") {
      out.push_back(run_boundary_delta_grid(max_n, jobs));
    } else if (name == "msun") {
      out.push_back(run_mansour_sun_grid(max_n, jobs));
    } else if (name == "mpk") {
      out.push_back(run_separated_mpk_grid(max_n, jobs));
    } else if (name == "mpk-minus-m") {
      out.push_back(run_separated_mpk_minus_m_grid(max_n, jobs));
    } else if (name == "hwang") {
      out.push_back(run_hwang_grid(max_n, jobs));
    } else if (name == "bijections") {
      out.push_back(run_scaling_grid(max_n, jobs));
      out.push_back(run_residue_grid(max_n, jobs));
      out.push_back(run_count_invariance_grid(max_n, jobs));
      out.push_back(run_subset_correspondence_grid(std::min<long long>(max_n, 10), jobs));
    } else if (name == "multisum") {
      out.push_back(run_multi_sum_grid(max_n, jobs));
    } else if (name == "cwz") {
      out.push_back(run_cwz_implication_grid(max_n, jobs));
    } else if (name == "rm") {
      out.push_back(run_rm_exhaustive_grid(2, 2, 3, 10, jobs));
    } else {
      throw std::invalid_argument("verify: unknown grid '" + name + "'");
    }
  }
  return out;
}

}  // namespace apkit

#include "apkit/partition_type.hpp"

#include <numeric>
#include <stdexcept>

namespace apkit {

PartitionType::PartitionType(std::vector<long long> counts) : counts_(std::move(counts)) {
  for (long long k : counts_)
    if (k < 0) throw std::domain_error("PartitionType: negative count");
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

long long PartitionType::block_count() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0LL);
}

long long PartitionType::weighted_sum() const {
  long long total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    total += static_cast<long long>(i + 1) * counts_[i];
  return total;
}

std::vector<long long> PartitionType::tail() const {
  if (counts_.size() <= 1) return {};
  return {counts_.begin() + 1, counts_.end()};
}

std::vector<long long> PartitionType::support() const {
  std::vector<long long> out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > 0) out.push_back(static_cast<long long>(i + 1));
  return out;
}

PartitionType PartitionType::singletons(long long n) {
  if (n < 1) throw std::domain_error("PartitionType::singletons: n must be >= 1");
  return PartitionType({n});
}

PartitionType PartitionType::separation_type(long long n, long long k, long long p) {
  if (n < 1 || k < 0 || p < 1) throw std::domain_error("separation_type: bad arguments");
  if (n < (p + 1) * k) throw std::domain_error("separation_type: n < (p+1)k");
  std::vector<long long> counts(static_cast<std::size_t>(k > 0 ? p + 1 : 1), 0);
  counts[0] = n - (p + 1) * k;
  if (k > 0) counts[static_cast<std::size_t>(p)] = k;
  return PartitionType(std::move(counts));
}

std::vector<PartitionType> PartitionType::all_bound_to(long long n) {
  if (n < 1) throw std::domain_error("all_bound_to: n must be >= 1");
  std::vector<PartitionType> out;
  std::vector<long long> counts;
  // Choose k_i for i = 1, 2, ... with the remaining weight as the bound.
  auto rec = [&](auto&& self, long long i, long long rem) -> void {
    if (rem == 0) {
      out.emplace_back(counts);
      return;
    }
    if (i > rem) return;
    counts.resize(static_cast<std::size_t>(i));
    for (long long k = rem / i; k >= 0; --k) {
      counts[static_cast<std::size_t>(i - 1)] = k;
      self(self, i + 1, rem - i * k);
      counts.resize(static_cast<std::size_t>(i));
    }
    counts[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(rec, 1, n);
  return out;
}

}  // namespace apkit

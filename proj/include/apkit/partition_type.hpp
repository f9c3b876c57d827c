#pragma once

#include <compare>
#include <string>
#include <vector>

namespace apkit {

// Multiset of block lengths, stored as the exponent vector (k_1,...,k_r):
// k_i blocks of length i. Canonical form trims trailing zero counts. When a
// type describes partitions of Z_n it is "bound" to n: sum i*k_i = n.
class PartitionType {
public:
  PartitionType() = default;
  explicit PartitionType(std::vector<long long> counts);

  // k_i, 1-indexed; zero outside the stored range.
  long long k(long long i) const {
    if (i < 1 || i > max_part()) return 0;
    return counts_[static_cast<std::size_t>(i - 1)];
  }

  long long max_part() const { return static_cast<long long>(counts_.size()); }  // r
  long long block_count() const;                                                 // K
  long long weighted_sum() const;                                                // sum i*k_i
  long long tail_sum() const { return block_count() - k(1); }                    // K' = k_2+...+k_r

  // (k_2,...,k_r); empty when r <= 1.
  std::vector<long long> tail() const;

  // Lengths i with k_i > 0, ascending.
  std::vector<long long> support() const;

  const std::vector<long long>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }
  bool binds(long long n) const { return !empty() && weighted_sum() == n; }

  static PartitionType singletons(long long n);  // 1^n
  // 1^{n-(p+1)k} (p+1)^k -- the type matched by k-subsets with separations
  // m, 2m, ..., pm forbidden. Requires n >= (p+1)k.
  static PartitionType separation_type(long long n, long long k, long long p);
  // Every type bound to n (the integer partitions of n), deterministic order.
  static std::vector<PartitionType> all_bound_to(long long n);

  friend bool operator==(const PartitionType&, const PartitionType&) = default;
  friend auto operator<=>(const PartitionType& a, const PartitionType& b) {
    return a.counts_ <=> b.counts_;
  }

private:
  std::vector<long long> counts_;
};

}  // namespace apkit

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "apkit/partition_type.hpp"

namespace apkit {

// A progression block in Z_n: the ordered sequence
//   (start, start + diff, ..., start + (length-1)*diff)  (mod modulus).
// A block is a sequence, not a set: a full-coset block with a different
// start is a different block. Elements must be pairwise distinct, which
// holds exactly when length <= modulus / gcd(diff, modulus).
struct ApBlock {
  long long start = 0;
  long long length = 1;
  long long diff = 1;
  long long modulus = 1;

  bool is_valid() const;
  std::vector<long long> elements() const;

  friend bool operator==(const ApBlock&, const ApBlock&) = default;
};

// A set of blocks with the same (modulus, difference) whose element sets
// partition Z_n. Canonical order: blocks ascending by start (starts are
// pairwise distinct since every element lies in exactly one block).
// Two partitions are equal iff their (start, length) sets are equal.
struct ApPartition {
  long long modulus = 1;
  long long difference = 1;
  std::vector<ApBlock> blocks;  // sorted by start

  PartitionType type() const;
  // (start, length) list in canonical order; the comparison key.
  std::vector<std::pair<long long, long long>> key() const;
  // Every element of Z_n covered exactly once.
  bool is_exact_cover() const;

  friend bool operator==(const ApPartition& a, const ApPartition& b) {
    return a.modulus == b.modulus && a.key() == b.key();
  }
  friend bool operator<(const ApPartition& a, const ApPartition& b) { return a.key() < b.key(); }
};

// "{(0,2,4),(1,3,5)}" with blocks in canonical order.
std::string to_string(const ApPartition& part);

// K-subset separation constraints: x_i - x_j not in {m, 2m, ..., pm} (mod n)
// for all ordered pairs (i, j), i = j included. (With i = j the constraint
// bites only when some q*m = 0 mod n, in which case no nonempty subset
// qualifies.)
struct SeparationSpec {
  long long n = 1;
  long long k = 0;
  long long m = 1;
  long long p = 1;

  void validate() const;
  // forbidden()[x] is true when x is an excluded difference.
  std::vector<bool> forbidden() const;
};

// --- brute-force enumeration (the oracle everything else is checked against) ---

// Exact-cover backtracking over blocks: the candidate set is every (start, L)
// with k_L > 0; recursion branches on the blocks covering the smallest
// uncovered element (a candidate may cover it at any internal position, so
// wrap-around blocks are found); remaining multiplicity is tracked per
// length. The visitor returns false to stop the search. Returns the number
// of partitions visited.
long long visit_ap_partitions(long long n, long long m, const PartitionType& t,
                              const std::function<bool(const ApPartition&)>& visit);

// All m-AP-partitions of Z_n of type t, each exactly once, in lexicographic
// order of the sorted (start, length) lists.
std::vector<ApPartition> enumerate_ap_partitions(long long n, long long m, const PartitionType& t);

// Count without materializing. max_nodes > 0 caps the number of search-tree
// nodes expanded; exceeding the cap throws std::runtime_error.
long long count_ap_partitions(long long n, long long m, const PartitionType& t,
                              long long max_nodes = 0);

// Dissections of an n-cycle are the 1-AP-partitions.
inline std::vector<ApPartition> enumerate_dissections(long long n, const PartitionType& t) {
  return enumerate_ap_partitions(n, 1, t);
}
inline long long count_dissections(long long n, const PartitionType& t) {
  return count_ap_partitions(n, 1, t);
}

// Separation-constrained k-subsets in lexicographic order, each as a sorted
// element list.
long long visit_separated_subsets(const SeparationSpec& spec,
                                  const std::function<bool(const std::vector<long long>&)>& visit);
std::vector<std::vector<long long>> enumerate_separated_subsets(const SeparationSpec& spec);
long long count_separated_subsets(const SeparationSpec& spec);

// --- constructive bijections ---

// Forward: the starts of the length-(p+1) blocks of a partition of type
// 1^{n-(p+1)k}(p+1)^k. Throws if some block length is neither 1 nor p+1.
std::vector<long long> partition_to_subset(const ApPartition& part, long long p);

// Inverse: blocks (x, x+m, ..., x+pm) for each subset element, singletons on
// the complement. The subset must satisfy the separation constraints.
ApPartition subset_to_partition(long long n, long long m, long long p,
                                const std::vector<long long>& subset);

// Multiply every block start by the unit a (difference becomes a*m mod n).
// Type-preserving; scaling by the inverse unit restores the original.
ApPartition scale_partition(const ApPartition& part, long long a);

// Split an m-AP-partition with m | n into m independent 1-AP-partitions of
// Z_{n/m}: the block with start s lies in residue class j = s mod m and maps
// through x -> (x - j)/m. Component j of the result is the class-j partition.
std::vector<ApPartition> residue_decompose(const ApPartition& part);
ApPartition residue_compose(long long n, long long m, const std::vector<ApPartition>& components);

}  // namespace apkit

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "apkit/exact.hpp"
#include "apkit/partition_type.hpp"

namespace apkit {

// Margin Delta = n - d(n - K) with d = gcd(m, n) and K the number of blocks.
// Its sign pattern decides which closed form counts the m-AP-partitions:
//   positive  -> the cyclic multinomial alone
//   zero/-d   -> cyclic multinomial plus a boundary correction
//   other     -> no closed form here (only brute force)
enum class DeltaRegime { positive, zero, minus_d, other };

struct DeltaClass {
  long long delta = 0;
  long long d = 1;
  DeltaRegime regime = DeltaRegime::positive;
};

const char* to_string(DeltaRegime regime);

DeltaClass delta_classify(long long n, long long m, const PartitionType& t);

// Count for Delta > 0: the cyclic multinomial n/K * binom(K; k_1..k_r),
// independent of m. Throws outside the regime.
ExactInt count_positive_delta(long long n, long long m, const PartitionType& t);

// The correction coefficient of the Delta = -d branch:
//   n                                                   if k_2 = 0
//   n * (1 - n(1 - 1/d) k_2 / (K'(K'-1)))               if k_2 > 0
// May be a non-integer rational in isolation; only the assembled count is
// integral.
ExactRat boundary_minus_d_coeff(long long n, long long d, const PartitionType& t);

// Count for Delta in {0, -d}: cyclic multinomial plus the boundary
// correction. Exact rational arithmetic throughout; the result is asserted
// integral. Throws outside the regime.
ExactInt count_boundary_delta(long long n, long long m, const PartitionType& t);

// k-subsets of Z_n avoiding differences {m, 2m, ..., pm}, for n >= mpk+1:
//   n/(n-pk) * binom(n-pk, k).
ExactInt count_mansour_sun(long long n, long long k, long long m, long long p);

// Same subsets at the boundary n = mpk (k >= 2):
//   n/(n-pk) * binom(n-pk, k) + (-1)^k n/k,
// where the first term is read through the limit convention when m = 1
// (n = pk), making the total 0 in that case.
ExactInt count_separated_at_mpk(long long m, long long p, long long k);

// Same subsets at n = mpk - m (pk > p+1):
//   p = 1 : n/(n-k)  * binom(n-k, k)  + (-1)^{k-1} n (m-2)
//   p >= 2: n/(n-pk) * binom(n-pk, k) + (-1)^k n
ExactInt count_separated_at_mpk_minus_m(long long m, long long p, long long k);

// Hwang's alternating sum for p = 1 (single forbidden difference m):
//   g_m(n,k) = sum_{j=0}^{floor(d/2)} (-1)^{nj/d} binom(d,j)
//              * (n-2nj/d)/(n-k-nj/d) * binom(n-k-nj/d, k-nj/d),  d = gcd(m,n).
// Valid for 0 <= k <= n/2. Each summand is read as the rational function
// x/(x-B) binom(x-B; B) at x = (n-2nj/d) with removable singularities filled
// by limits: lower index B < 0 gives 0, B = 0 gives 1, and a vanishing
// denominator with B >= 1 gives (-1)^{B-1} times the leading factors.
ExactInt hwang_count(long long n, long long k, long long m);

// Nonnegative matrix (k_{i,j}), 2 <= i <= r, 0 <= j <= m-1, distributing the
// tail of a type across m residue classes: row i sums to k_i.
struct ResidueMatrix {
  long long r = 1;        // largest length index
  long long columns = 1;  // m
  // rows[i-2][j] = k_{i,j}
  std::vector<std::vector<long long>> rows;

  std::vector<long long> column(long long j) const;       // (k_{2,j},...,k_{r,j})
  long long column_weight(long long j) const;             // sum (i-1) k_{i,j}
};

// Every residue matrix for type t with m columns, in odometer order.
void for_each_residue_matrix(const PartitionType& t, long long m,
                             const std::function<void(const ResidueMatrix&)>& fn);

// The residue-class multi-sum: with m | n and n1 = n/m,
//   sum over residue matrices with every column weight < n1 of
//   prod_j n1/(n1 - w_j) * binom(n1 - w_j; k_{2,j},...,k_{r,j}).
// Equals the exact m-AP-partition count of Z_n for every type (by the
// residue-decomposition bijection), whatever the Delta regime.
ExactInt residue_multi_sum_count(long long n, long long m, const PartitionType& t);

// The collapsed boundary expression evaluated at a generic integer point x
// (the count formulas are its value at x = n1). Generically it equals the
// multi-sum over all row-sum matrices minus the excluded-matrix correction;
// useful for cross-checking the collapse at several x.
ExactRat boundary_series_at(long long x, long long m, const PartitionType& t, DeltaRegime regime);

// Which route produced a count.
enum class CountMethod { positive_delta, boundary_delta, enumeration };

const char* to_string(CountMethod method);

struct CountResult {
  ExactInt count;
  CountMethod method;
};

// Dispatcher: positive -> cyclic multinomial, zero/-d -> boundary formula,
// other -> brute-force enumeration capped at node_budget search nodes
// (throws when the cap is hit; there is no closed form for those margins).
CountResult count_auto(long long n, long long m, const PartitionType& t,
                       long long node_budget = 5'000'000);

// The length-1-dominance condition from Chen-Wang-Zhang:
//   k_1 > (k_2+...+k_r) * ((m-1)(i_r - 1) - 1),
// with i_r the largest length in the support. Types without length-1 blocks
// yield false by convention. Implies Delta > 0.
bool cwz_condition(long long m, const PartitionType& t);

}  // namespace apkit

#pragma once

#include <vector>

#include "apkit/exact.hpp"

namespace apkit {

// k!, memoized per thread.
const ExactInt& factorial(long long k);

// Generalized multinomial coefficient
//
//   binom(x; k_1,...,k_r) = x(x-1)...(x - K + 1) / (k_1! ... k_r!),  K = sum k_i,
//
// defined for any integer x (negative allowed) by the falling factorial.
// Always an integer. Empty ks gives 1. For x = K this is the classical
// multinomial coefficient.
ExactInt gen_multinomial(long long x, const std::vector<long long>& ks);

// n/K * binom(K; k_1,...,k_r) with K = sum k_i >= 1. Exact rational; the
// value is integral whenever sum i*k_i = n (it then counts the dissections
// of an n-cycle of that type), but non-divisor K is allowed.
ExactRat cyclic_multinomial(long long n, const std::vector<long long>& ks);

// lim_{z->0} (1/z) * binom(z; a_1,...,a_s)
//   = (-1)^(A-1)/A * binom(A; a_1,...,a_s),  A = sum a_i >= 1.
ExactRat limit0_multinomial(const std::vector<long long>& ks);

// x/(x-w) * binom(x-w; k_1,...,k_r), with the pole x = w filled by the
// limit convention: x * lim_{z->0} (1/z) binom(z; ks). Throws when x = w
// and ks sums to zero (genuinely indeterminate).
ExactRat guarded_cyclic_term(long long x, long long w, const std::vector<long long>& ks);

// gcd with (0,0) rejected; result is nonnegative.
ExactInt checked_gcd(const ExactInt& a, const ExactInt& b);

struct Bezout {
  ExactInt g;  // gcd(a, b) >= 0
  ExactInt u;
  ExactInt v;  // g = u*a + v*b
};

Bezout extended_gcd(const ExactInt& a, const ExactInt& b);

// Smallest a in [1, n] with gcd(a, n) = 1 and a*m = gcd(m, n) (mod n),
// together with its inverse mod n. Existence is guaranteed for all
// m, n >= 1; determinism (smallest representative) makes bijection tests
// reproducible.
struct ScalingUnit {
  long long a;
  long long a_inv;  // a * a_inv = 1 (mod n)
  long long d;      // gcd(m, n)
};

ScalingUnit find_scaling_unit(long long m, long long n);

}  // namespace apkit

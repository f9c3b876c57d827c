#include "apkit/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace apkit {

const ExactInt& factorial(long long k) {
  if (k < 0) throw std::domain_error("factorial: negative argument");
  thread_local std::vector<ExactInt> cache{1};
  while (static_cast<long long>(cache.size()) <= k)
    cache.push_back(cache.back() * static_cast<long long>(cache.size()));
  return cache[static_cast<std::size_t>(k)];
}

namespace {

long long checked_sum(const std::vector<long long>& ks) {
  long long total = 0;
  for (long long k : ks) {
    if (k < 0) throw std::domain_error("multinomial: negative count");
    total += k;
  }
  return total;
}

}  // namespace

ExactInt gen_multinomial(long long x, const std::vector<long long>& ks) {
  const long long K = checked_sum(ks);
  ExactInt num = 1;
  for (long long j = 0; j < K; ++j) num *= (x - j);
  for (long long k : ks) {
    const ExactInt& f = factorial(k);
    ExactInt q, r;
    divide_qr(num, f, q, r);
    if (r != 0) throw std::logic_error("gen_multinomial: non-exact division");
    num = std::move(q);
  }
  return num;
}

ExactRat cyclic_multinomial(long long n, const std::vector<long long>& ks) {
  const long long K = checked_sum(ks);
  if (K == 0) throw std::domain_error("cyclic_multinomial: empty type");
  return {ExactInt(n) * gen_multinomial(K, ks), ExactInt(K)};
}

ExactRat limit0_multinomial(const std::vector<long long>& ks) {
  const long long A = checked_sum(ks);
  if (A == 0) throw std::domain_error("limit0_multinomial: empty type");
  ExactInt num = gen_multinomial(A, ks);
  if ((A - 1) % 2 != 0) num = -num;
  return {std::move(num), ExactInt(A)};
}

ExactRat guarded_cyclic_term(long long x, long long w, const std::vector<long long>& ks) {
  const long long z = x - w;
  if (z != 0) return ExactRat(ExactInt(x), ExactInt(z)) * ExactRat(gen_multinomial(z, ks));
  if (checked_sum(ks) == 0)
    throw std::domain_error("guarded_cyclic_term: indeterminate term (x = w, empty type)");
  return ExactRat(ExactInt(x)) * limit0_multinomial(ks);
}

ExactInt checked_gcd(const ExactInt& a, const ExactInt& b) {
  if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Bezout extended_gcd(const ExactInt& a, const ExactInt& b) {
  if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
  // Iterative extended Euclid on (r0, r1), carrying the u/v cofactors.
  ExactInt r0 = a, r1 = b;
  ExactInt u0 = 1, u1 = 0;
  ExactInt v0 = 0, v1 = 1;
  while (r1 != 0) {
    ExactInt q = r0 / r1;
    ExactInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = u0 - q * u1;
    u0 = u1;
    u1 = tmp;
    tmp = v0 - q * v1;
    v0 = v1;
    v1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    u0 = -u0;
    v0 = -v0;
  }
  return {r0, u0, v0};
}

ScalingUnit find_scaling_unit(long long m, long long n) {
  if (m < 1 || n < 1) throw std::domain_error("find_scaling_unit: m, n must be >= 1");
  const long long d = std::gcd(m, n);
  if (n == 1) return {1, 1, 1};
  const long long target = d % n;
  const long long mm = m % n;
  for (long long a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    if ((a * mm) % n != target) continue;
    Bezout bz = extended_gcd(a, n);
    long long inv = static_cast<long long>(bz.u % n);
    if (inv < 0) inv += n;
    return {a, inv, d};
  }
  throw std::logic_error("find_scaling_unit: no unit found (impossible)");
}

std::ostream& operator<<(std::ostream& os, const ExactRat& r) { return os << r.to_string(); }

}  // namespace apkit

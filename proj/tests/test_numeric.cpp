#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "apkit/numeric.hpp"

using namespace apkit;

namespace {

// Independent factorial-quotient oracle: plain loops, no shared code with
// gen_multinomial's falling-factorial path.
ExactInt plain_factorial(long long k) {
  ExactInt f = 1;
  for (long long i = 2; i <= k; ++i) f *= i;
  return f;
}

ExactInt classical_multinomial(const std::vector<long long>& ks) {
  long long total = std::accumulate(ks.begin(), ks.end(), 0LL);
  ExactInt v = plain_factorial(total);
  for (long long k : ks) v /= plain_factorial(k);
  return v;
}

// Exact Lagrange interpolation of f at target from sample points (x, f(x)).
ExactRat lagrange_at(const std::vector<std::pair<long long, ExactRat>>& samples,
                     long long target) {
  ExactRat total;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ExactRat basis(1);
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (i == j) continue;
      basis *= ExactRat(ExactInt(target - samples[j].first),
                        ExactInt(samples[i].first - samples[j].first));
    }
    total += samples[i].second * basis;
  }
  return total;
}

}  // namespace

TEST_CASE("ExactRat invariants") {
  ExactRat r(ExactInt(6), ExactInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK_FALSE(r.is_integer());
  CHECK_THROWS_AS(r.to_integer(), std::domain_error);
  CHECK(ExactRat(ExactInt(10), ExactInt(5)).to_integer() == 2);
  CHECK(ExactRat(ExactInt(0), ExactInt(-7)) == ExactRat(0));
  CHECK_THROWS_AS(ExactRat(ExactInt(1), ExactInt(0)), std::domain_error);
  CHECK(ExactRat(1, 3) + ExactRat(1, 6) == ExactRat(1, 2));
  CHECK(ExactRat(2, 3) * ExactRat(3, 4) == ExactRat(1, 2));
  CHECK(ExactRat(1, 2) - ExactRat(1, 2) == ExactRat(0));
  CHECK(ExactRat(1, 2) / ExactRat(1, 4) == ExactRat(2));
  CHECK_THROWS_AS(ExactRat(1) / ExactRat(0), std::domain_error);
  CHECK(ExactRat(-1, 2) < ExactRat(1, 3));
  CHECK(ExactRat(ExactInt(7), ExactInt(1)).to_string() == "7");
  CHECK(ExactRat(ExactInt(-5), ExactInt(10)).to_string() == "-1/2");
}

TEST_CASE("gen_multinomial basics") {
  CHECK(gen_multinomial(10, {4, 3, 2, 1}) == 12600);
  CHECK(gen_multinomial(10, {4, 3, 2, 1}) ==
        plain_factorial(10) / (plain_factorial(4) * plain_factorial(3) * plain_factorial(2)));
  // empty product
  for (long long x : {-5LL, 0LL, 1LL, 17LL}) CHECK(gen_multinomial(x, {}) == 1);
  // negative upper argument via the falling factorial
  CHECK(gen_multinomial(-1, {1, 2}) == -3);
  CHECK(gen_multinomial(-1, {3}) == -1);
  CHECK(gen_multinomial(-2, {2}) == 3);
  CHECK_THROWS_AS(gen_multinomial(3, {-1}), std::domain_error);
}

TEST_CASE("gen_multinomial negative-upper identity, exhaustive to sum 10") {
  // binom(-1; ks) = (-1)^K binom(K; ks)
  std::vector<long long> ks;
  auto rec = [&](auto&& self, long long depth, long long rem) -> void {
    if (depth == 0) {
      const long long K = std::accumulate(ks.begin(), ks.end(), 0LL);
      const ExactInt lhs = gen_multinomial(-1, ks);
      const ExactInt rhs = (K % 2 == 0 ? 1 : -1) * gen_multinomial(K, ks);
      CHECK(lhs == rhs);
      return;
    }
    for (long long k = 0; k <= rem; ++k) {
      ks.push_back(k);
      self(self, depth - 1, rem - k);
      ks.pop_back();
    }
  };
  for (long long r = 1; r <= 3; ++r) rec(rec, r, 10);
}

TEST_CASE("gen_multinomial splits as binomial times classical multinomial") {
  for (long long x = -6; x <= 8; ++x) {
    for (const std::vector<long long>& ks :
         {std::vector<long long>{2, 1}, {3, 0, 2}, {1, 1, 1, 1}, {4}}) {
      const long long K = std::accumulate(ks.begin(), ks.end(), 0LL);
      CHECK(gen_multinomial(x, ks) == gen_multinomial(x, {K}) * classical_multinomial(ks));
    }
  }
}

TEST_CASE("cyclic_multinomial") {
  CHECK(cyclic_multinomial(20, {4, 3, 2, 1}) == ExactRat(25200));
  CHECK(cyclic_multinomial(6, {0, 0, 2}) == ExactRat(3));
  for (long long n = 1; n <= 8; ++n) {
    std::vector<long long> type1n{n};
    CHECK(cyclic_multinomial(n, type1n) == ExactRat(1));
  }
  CHECK_THROWS_AS(cyclic_multinomial(5, {0, 0}), std::domain_error);
  // non-divisor block count stays rational until the product is assembled
  CHECK(cyclic_multinomial(120, {89, 3, 2, 0, 1, 0, 2}).is_integer());
}

TEST_CASE("limit0_multinomial") {
  for (long long k = 1; k <= 8; ++k) {
    const long long sign = (k - 1) % 2 == 0 ? 1 : -1;
    CHECK(limit0_multinomial({k}) == ExactRat(ExactInt(sign), ExactInt(k)));
  }
  CHECK(limit0_multinomial({1}) == ExactRat(1));
  CHECK(limit0_multinomial({1, 2}) == ExactRat(1));
  CHECK_THROWS_AS(limit0_multinomial({}), std::domain_error);
  CHECK_THROWS_AS(limit0_multinomial({0, 0}), std::domain_error);
}

TEST_CASE("guarded_cyclic_term values") {
  CHECK(guarded_cyclic_term(3, 1, {1}) == ExactRat(3));
  CHECK(guarded_cyclic_term(7, 0, {}) == ExactRat(1));
  CHECK(guarded_cyclic_term(5, 5, {2}) == ExactRat(-5, 2));
  CHECK_THROWS_AS(guarded_cyclic_term(4, 4, {}), std::domain_error);
  CHECK_THROWS_AS(guarded_cyclic_term(4, 4, {0, 0}), std::domain_error);
}

TEST_CASE("guarded_cyclic_term fills the pole with the polynomial value") {
  // x/(x-w) binom(x-w; ks) is a polynomial in x of degree K when K >= 1;
  // interpolating K+1 off-pole samples at x = w must hit the guarded value.
  for (const std::vector<long long>& ks :
       {std::vector<long long>{1}, {2}, {1, 1}, {0, 2}, {1, 2}}) {
    const long long K = std::accumulate(ks.begin(), ks.end(), 0LL);
    for (long long w : {-2LL, 0LL, 3LL}) {
      std::vector<std::pair<long long, ExactRat>> samples;
      for (long long x = w + 1; static_cast<long long>(samples.size()) < K + 1; ++x)
        samples.emplace_back(x, guarded_cyclic_term(x, w, ks));
      CHECK(guarded_cyclic_term(w, w, ks) == lagrange_at(samples, w));
      CHECK(guarded_cyclic_term(w - 1, w, ks) == lagrange_at(samples, w - 1));
    }
  }
}

TEST_CASE("checked_gcd and extended_gcd") {
  CHECK(checked_gcd(2, 6) == 2);
  CHECK(checked_gcd(3, 20) == 1);
  CHECK(checked_gcd(-12, 18) == 6);
  CHECK_THROWS_AS(checked_gcd(0, 0), std::domain_error);
  const Bezout bz = extended_gcd(120, 28);
  CHECK(bz.g == 4);
  CHECK(bz.u * 120 + bz.v * 28 == 4);
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      const Bezout e = extended_gcd(a, b);
      CHECK(e.g == checked_gcd(a, b));
      CHECK(e.u * a + e.v * b == e.g);
    }
}

TEST_CASE("find_scaling_unit") {
  CHECK(find_scaling_unit(2, 6).a == 1);
  CHECK(find_scaling_unit(4, 6).a == 5);
  for (long long n : {1LL, 4LL, 9LL}) CHECK(find_scaling_unit(n, n).a == 1);

  for (long long n = 1; n <= 50; ++n)
    for (long long m = 1; m <= n; ++m) {
      const ScalingUnit u = find_scaling_unit(m, n);
      CHECK(u.d == std::gcd(m, n));
      CHECK(std::gcd(u.a, n) == 1);
      CHECK((u.a * (m % n)) % n == u.d % n);
      CHECK((u.a * u.a_inv) % n == 1 % n);
      // smallest positive representative
      for (long long b = 1; b < u.a; ++b) {
        const bool also_works = std::gcd(b, n) == 1 && (b * (m % n)) % n == u.d % n;
        CHECK_FALSE(also_works);
      }
    }
}

TEST_CASE("factorial memo") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == plain_factorial(20));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}
